//! Data-parallel helpers with a sequential fallback.
//!
//! Every helper preserves input order in its result, so callers get the same
//! answer whichever [`Parallelism`] they pick. Without the `parallel` feature
//! both modes run sequentially.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Execution mode for the fan-out points of the toolkit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Parallelism {
    Sequential,
    #[default]
    Parallel,
}

impl Parallelism {
    /// True when work will actually be spread over the rayon pool.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Parallelism::Parallel
    }
}

/// Map every item, keeping input order.
pub fn map<T, R, F>(mode: Parallelism, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if mode.is_parallel() {
        return items.par_iter().map(f).collect();
    }
    let _ = mode;
    items.iter().map(f).collect()
}

/// The result for the earliest item (in input order) for which `f` returns
/// `Some`.
pub fn find_map_first<T, R, F>(mode: Parallelism, items: &[T], f: F) -> Option<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> Option<R> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if mode.is_parallel() {
        return items.par_iter().find_map_first(f);
    }
    let _ = mode;
    items.iter().find_map(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modes_agree() {
        let items: Vec<u32> = (0..500).collect();
        let f = |x: &u32| (x % 97 == 42).then_some(*x);
        assert_eq!(
            find_map_first(Parallelism::Sequential, &items, f),
            find_map_first(Parallelism::Parallel, &items, f)
        );
        assert_eq!(find_map_first(Parallelism::Parallel, &items, f), Some(42));
        let sq = |x: &u32| x * x;
        assert_eq!(
            map(Parallelism::Sequential, &items, sq),
            map(Parallelism::Parallel, &items, sq)
        );
    }
}
