//! Lower-bound colorings: two-color critical colorings and the witness
//! constructions built from them.
//!
//! Every coloring is checked with [`violates`](crate::detect::violates)
//! before it is returned; a failed check is reported as
//! [`Error::Verification`] and nothing is emitted.

use serde::Serialize;

use crate::coloring::{EdgeColoring, SplitRecipe};
use crate::detect::violates;
use crate::error::{Error, Result};
use crate::formulas::{eval_formula, FormulaParams, FormulaValue};
use crate::target::TargetGraph::{self, Cycle, Matching, Path, Star};

/// A pair of targets with a known two-color Ramsey number `R`, for which a
/// 2-coloring of `K_{R-1}` avoiding both is produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CriticalPair {
    /// `[C_n0, P_n1]`, `n_0 >= n_1 >= 2`, `n_0 >= 3`; odd `n_0` also needs
    /// `n_0 + floor(n_1/2) >= 2n_1`.
    CP { n0: usize, n1: usize },
    /// `[P_m, P_n]`, `m >= n >= 2`.
    PP { m: usize, n: usize },
    /// `[tK_2, P_m]`, `t > floor(m/2)` or `t = m-1` with `m` even.
    MP { t: usize, m: usize },
    /// `[tK_2, C_n]`, `n >= 3`.
    MC { t: usize, n: usize },
    /// `[C_n, kK_2]`, `k <= floor(n/2)`.
    CM { n: usize, k: usize },
    /// `[C_2n, P_3]`, `n >= 2`.
    P3C { n: usize },
    /// A caller-supplied 2-coloring, checked against `targets`.
    Provided { coloring: EdgeColoring, targets: [TargetGraph; 2] },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Critical {
    pub coloring: EdgeColoring,
    pub targets: [TargetGraph; 2],
}

impl CriticalPair {
    pub fn targets(&self) -> [TargetGraph; 2] {
        match *self {
            CriticalPair::CP { n0, n1 } => [Cycle(n0), Path(n1)],
            CriticalPair::PP { m, n } => [Path(m), Path(n)],
            CriticalPair::MP { t, m } => [Matching(t), Path(m)],
            CriticalPair::MC { t, n } => [Matching(t), Cycle(n)],
            CriticalPair::CM { n, k } => [Cycle(n), Matching(k)],
            CriticalPair::P3C { n } => [Cycle(2 * n), Path(3)],
            CriticalPair::Provided { targets, .. } => targets,
        }
    }

    /// The two-color Ramsey number the coloring is critical for.
    pub fn ramsey(&self) -> Option<usize> {
        Some(match *self {
            CriticalPair::CP { n0, n1 } => n0 + n1 / 2 - 1,
            CriticalPair::PP { m, n } => m + n / 2 - 1,
            CriticalPair::MP { t, m } => 2 * t + m / 2 - 1,
            CriticalPair::MC { t, n } => crate::formulas::tk2_cn(t as i64, n as i64) as usize,
            CriticalPair::CM { n, k } => n + k - 1,
            CriticalPair::P3C { n } => 2 * n,
            CriticalPair::Provided { .. } => return None,
        })
    }

    fn check_range(&self) -> Result<()> {
        let ok = match *self {
            CriticalPair::CP { n0, n1 } => {
                n0 >= n1 && n1 >= 2 && n0 >= 3 && (n0 % 2 == 0 || n0 + n1 / 2 >= 2 * n1)
            }
            CriticalPair::PP { m, n } => m >= n && n >= 2,
            CriticalPair::MP { t, m } => m >= 2 && (t > m / 2 || (m % 2 == 0 && t + 1 == m)),
            CriticalPair::MC { t, n } => t >= 1 && n >= 3,
            CriticalPair::CM { n, k } => n >= 3 && k >= 1 && k <= n / 2,
            CriticalPair::P3C { n } => n >= 2,
            CriticalPair::Provided { .. } => true,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::Precondition {
                id: format!("{self:?}"),
                failed: vec!["parameters outside the range where the two-color value is known".into()],
            })
        }
    }
}

/// Two blocks: the first a clique in `inner`, every other edge in `outer`.
fn split2(a: usize, b: usize, inner: usize, outer: usize) -> Result<EdgeColoring> {
    SplitRecipe::new(vec![a, b]).set(0, 0, inner).fill(outer).apply_split(2)
}

/// A 2-coloring of `K_{R-1}` with no color-1 copy of the first target and no
/// color-2 copy of the second.
pub fn two_color_critical(pair: CriticalPair) -> Result<Critical> {
    pair.check_range()?;
    let targets = pair.targets();
    let ramsey = pair.ramsey();
    let coloring = match pair {
        CriticalPair::CP { n0, n1 } => split2(n0 - 1, n1 / 2 - 1, 1, 2)?,
        CriticalPair::PP { m, n } => split2(m - 1, n / 2 - 1, 1, 2)?,
        CriticalPair::MP { t, m } => split2(2 * t - 1, m / 2 - 1, 1, 2)?,
        CriticalPair::MC { t, n } => {
            if t >= n / 2 {
                split2(2 * t - 1, n.div_ceil(2) - 1, 1, 2)?
            } else {
                split2(n - 1, t - 1, 2, 1)?
            }
        }
        CriticalPair::CM { n, k } => split2(n - 1, k - 1, 1, 2)?,
        CriticalPair::P3C { n } => EdgeColoring::monochromatic(2 * n - 1, 2, 1)?,
        CriticalPair::Provided { coloring, .. } => {
            if coloring.k() != 2 {
                return Err(Error::ArityMismatch { targets: 2, colors: coloring.k() });
            }
            coloring
        }
    };
    if let Some(v) = violates(&coloring, &targets)? {
        return Err(Error::Verification(format!(
            "critical coloring has a color-{} {} on {:?}",
            v.color, v.embedding.target, v.embedding.vertices
        )));
    }
    if let Some(r) = ramsey {
        if coloring.order() + 1 != r {
            return Err(Error::Verification(format!(
                "critical coloring has {} vertices, expected {}",
                coloring.order(),
                r - 1
            )));
        }
    }
    Ok(Critical { coloring, targets })
}

/// The inner coloring a construction nests on its first block, with the
/// targets it is meant to avoid (one per color).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Inner {
    pub coloring: EdgeColoring,
    pub targets: Vec<TargetGraph>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessSpec {
    pub theorem: String,
    pub params: FormulaParams,
    /// Number of host vertices: the claimed value minus one.
    pub expected_order: usize,
    pub targets: Vec<TargetGraph>,
    pub claimed_value: i64,
    pub verified: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub coloring: EdgeColoring,
    pub spec: WitnessSpec,
    /// Block layout; the first block carries the nested coloring when there
    /// is one.
    pub blocks: Vec<usize>,
}

/// Ids accepted by [`witness`].
pub const WITNESS_IDS: &[&str] = &[
    "thm_q",
    "cor_q_path",
    "thm_p_i",
    "thm_p_ii",
    "thm_Far",
    "cor_s",
    "thm_h1",
    "thm_h1_path",
    "thm_stripe_star",
    "thm_p3c2n",
    "thm_c2m_c4",
    "thm_c2m_c4_1",
    "thm_c2m_c4_2",
    "cor_AA",
    "ref_pp",
    "ref_cp",
    "ref_cn_kk2",
    "ref_tk2_p",
    "ref_p3c2n",
    "thm_tk2_cn",
];

fn uint(params: &FormulaParams, id: &str, name: &str) -> Result<usize> {
    let v = params
        .int(name)
        .ok_or_else(|| Error::MissingParam { id: id.to_string(), param: name.to_string() })?;
    usize::try_from(v).map_err(|_| Error::Precondition {
        id: id.to_string(),
        failed: vec![format!("{name} >= 0")],
    })
}

fn ulist(params: &FormulaParams, name: &str) -> Vec<usize> {
    params.list(name).map(|l| l.iter().map(|&v| v.max(0) as usize).collect()).unwrap_or_default()
}

/// Build the lower-bound coloring for theorem `id`, on `claimed - 1`
/// vertices, and check that it avoids every target.
pub fn witness(id: &str, params: &FormulaParams, inner: Option<&Inner>) -> Result<Witness> {
    let formula_id = match id {
        "thm_c2m_c4" => {
            let (m, t) = (uint(params, id, "m")?, uint(params, id, "t")?);
            if t > m {
                "thm_c2m_c4_1"
            } else {
                "thm_c2m_c4_2"
            }
        }
        other if WITNESS_IDS.contains(&other) => other,
        other => return Err(Error::UnknownId(other.to_string())),
    };
    let result = eval_formula(formula_id, params)?;
    let claimed = match result.value {
        FormulaValue::Exact { value } => value,
        FormulaValue::Bracket { lower, .. } => lower,
        other => {
            return Err(Error::Verification(format!("{formula_id} yields {other:?}, not a lower bound")))
        }
    };
    let u = |name: &str| uint(params, formula_id, name);
    let (recipe, k, targets) = match formula_id {
        "thm_q" | "cor_q_path" => {
            let (n0, n1, n2) = (u("n_0")?, u("n_1")?, u("n_2")?);
            let (first, crit) = if formula_id == "thm_q" {
                (Cycle(n0), two_color_critical(CriticalPair::CP { n0, n1 })?)
            } else {
                (Path(n0), two_color_critical(CriticalPair::PP { m: n0, n: n1 })?)
            };
            let r1 = crit.coloring.order();
            let recipe = SplitRecipe::new(vec![r1, n2 / 2 - 1])
                .with_override(0, crit.coloring)
                .set(0, 0, 1)
                .set(1, 1, 2)
                .set(0, 1, 3);
            (recipe, 3, vec![first, Path(n1), Path(n2)])
        }
        "thm_p_i" => {
            let k = u("k")?;
            let crit = two_color_critical(CriticalPair::MP { t: k - 1, m: k })?;
            let recipe = nest_two(crit.coloring, k / 2 - 1);
            (recipe, 3, vec![Matching(k - 1), Path(k), Path(k)])
        }
        "thm_p_ii" => {
            let (s, m, t) = (u("s")?, u("m")?, u("t")?);
            if t <= s {
                return Err(Error::Precondition {
                    id: formula_id.into(),
                    failed: vec!["t > s (needed for the nested two-color value)".into()],
                });
            }
            let crit = two_color_critical(CriticalPair::MP { t, m: 2 * s + 1 })?;
            let recipe = nest_two(crit.coloring, m - 1);
            (recipe, 3, vec![Matching(t), Path(2 * s + 1), Path(2 * m)])
        }
        "thm_Far" | "cor_s" => {
            let n = u("n")?;
            let ms = ulist(params, "m_list");
            let ks = ulist(params, "k_list");
            let first = if formula_id == "thm_Far" { Cycle(n) } else { Path(n) };
            far(first, &ms, &ks)?
        }
        "thm_h1" | "thm_h1_path" => {
            let (n, kk) = (u("n")?, u("k")?);
            let first = if formula_id == "thm_h1" { Cycle(n) } else { Path(n) };
            let block = if formula_id == "thm_h1" {
                two_color_critical(CriticalPair::CM { n, k: kk })?.coloring
            } else {
                split2(n - 1, kk - 1, 1, 2)?
            };
            let recipe = SplitRecipe::new(vec![n + kk - 2, kk - 1])
                .with_override(0, block)
                .set(0, 0, 1)
                .set(1, 1, 3)
                .set(0, 1, 3);
            (recipe, 3, vec![first, Matching(kk), Matching(kk)])
        }
        "thm_stripe_star" => {
            let (m, t) = (u("m")?, u("t")?);
            let ks = ulist(params, "k_list");
            let recipe = SplitRecipe::new(vec![m - 1, t - 1]).set(0, 0, 2).fill(1);
            let mut targets = vec![Matching(t), Path(m)];
            targets.extend(ks.iter().map(|&k| Star(k)));
            (recipe, targets.len(), targets)
        }
        "thm_p3c2n" => {
            let (n, t) = (u("n")?, u("t")?);
            let crit = two_color_critical(CriticalPair::P3C { n })?;
            let block = crit.coloring.relabel(&[3, 2], 3)?;
            let recipe = SplitRecipe::new(vec![2 * n - 1, t - 1])
                .with_override(0, block)
                .set(0, 0, 3)
                .set(1, 1, 1)
                .set(0, 1, 1);
            (recipe, 3, vec![Matching(t), Path(3), Cycle(2 * n)])
        }
        "thm_c2m_c4_1" | "thm_c2m_c4_2" => {
            let (m, t) = (u("m")?, u("t")?);
            let crit = two_color_critical(CriticalPair::MC { t, n: 2 * m })?;
            let recipe = SplitRecipe::new(vec![crit.coloring.order(), 1])
                .with_override(0, crit.coloring)
                .set(0, 0, 1)
                .fill(3);
            (recipe, 3, vec![Matching(t), Cycle(2 * m), Cycle(4)])
        }
        "cor_AA" => cor_aa(u("t")?, inner)?,
        "ref_pp" | "ref_cp" | "ref_cn_kk2" | "ref_tk2_p" | "ref_p3c2n" | "thm_tk2_cn" => {
            let pair = match formula_id {
                "ref_pp" => CriticalPair::PP { m: u("m")?, n: u("n")? },
                "ref_cp" => CriticalPair::CP { n0: u("n_0")?, n1: u("n_1")? },
                "ref_cn_kk2" => CriticalPair::CM { n: u("n")?, k: u("k")? },
                "ref_tk2_p" if params.int("k").is_some() => {
                    let k = u("k")?;
                    CriticalPair::MP { t: k - 1, m: k }
                }
                "ref_tk2_p" => CriticalPair::MP { t: u("t")?, m: 2 * u("s")? + 1 },
                "ref_p3c2n" => CriticalPair::P3C { n: u("n")? },
                _ => CriticalPair::MC { t: u("t")?, n: u("n")? },
            };
            let crit = two_color_critical(pair)?;
            let n = crit.coloring.order();
            let recipe = SplitRecipe::new(vec![n]).with_override(0, crit.coloring).set(0, 0, 1);
            (recipe, 2, crit.targets.to_vec())
        }
        _ => unreachable!("witness id list and match arms agree"),
    };

    let coloring = recipe.apply_split(k)?;
    let blocks = recipe.blocks().to_vec();
    let expected = usize::try_from(claimed - 1).unwrap_or(0);
    if coloring.order() != expected {
        return Err(Error::Verification(format!(
            "{id}: construction has {} vertices, expected {expected}",
            coloring.order()
        )));
    }
    if let Some(v) = violates(&coloring, &targets)? {
        return Err(Error::Verification(format!(
            "{id}: color {} contains {} on {:?}",
            v.color, v.embedding.target, v.embedding.vertices
        )));
    }
    Ok(Witness {
        coloring,
        spec: WitnessSpec {
            theorem: id.to_string(),
            params: params.clone(),
            expected_order: expected,
            targets,
            claimed_value: claimed,
            verified: true,
        },
        blocks,
    })
}

/// `K_{R-1}` carrying a critical 2-coloring, a second clique in color 2 and
/// the join in color 3.
fn nest_two(critical: EdgeColoring, second: usize) -> SplitRecipe {
    SplitRecipe::new(vec![critical.order(), second])
        .with_override(0, critical)
        .set(0, 0, 1)
        .set(1, 1, 2)
        .set(0, 1, 3)
}

/// Block 0 is `K_{n-1}` in color 1; matching `j` owns block `j` (of size
/// `m_j - 1`) and colors its inside, its edges to block 0 and its edges to
/// every later block. Star colors stay empty.
fn far(
    first: TargetGraph,
    ms: &[usize],
    ks: &[usize],
) -> Result<(SplitRecipe, usize, Vec<TargetGraph>)> {
    let n = first.order();
    let mut blocks = vec![n - 1];
    blocks.extend(ms.iter().map(|&m| m - 1));
    let mut recipe = SplitRecipe::new(blocks).set(0, 0, 1);
    let base = 1 + ks.len();
    for j in 1..=ms.len() {
        let color = base + j;
        recipe = recipe.set(0, j, color).set(j, j, color);
        for later in j + 1..=ms.len() {
            recipe = recipe.set(j, later, color);
        }
    }
    let mut targets = vec![first];
    targets.extend(ks.iter().map(|&k| Star(k)));
    targets.extend(ms.iter().map(|&m| Matching(m)));
    Ok((recipe, targets.len(), targets))
}

fn cor_aa(t: usize, inner: Option<&Inner>) -> Result<(SplitRecipe, usize, Vec<TargetGraph>)> {
    let inner = inner.ok_or_else(|| Error::MissingParam {
        id: "cor_AA".into(),
        param: "inner coloring".into(),
    })?;
    let k = inner.coloring.k();
    if inner.targets.len() != k {
        return Err(Error::ArityMismatch { targets: inner.targets.len(), colors: k });
    }
    let mut failed = Vec::new();
    if inner.coloring.host().kind() != (crate::coloring::HostKind::Complete { n: 2 * t - 1 }) {
        failed.push(format!("inner coloring is on K_{} (got {})", 2 * t - 1, inner.coloring.host().kind()));
    }
    if let Some(g) = inner.targets.iter().find(|g| !g.is_bipartite()) {
        failed.push(format!("every G_i is bipartite ({g} is not)"));
    }
    if !failed.is_empty() {
        return Err(Error::Precondition { id: "cor_AA".into(), failed });
    }
    if let Some(v) = violates(&inner.coloring, &inner.targets)? {
        return Err(Error::Verification(format!(
            "inner coloring has a color-{} {} on {:?}",
            v.color, v.embedding.target, v.embedding.vertices
        )));
    }
    let recipe = SplitRecipe::new(vec![2 * t - 1, t - 1])
        .with_override(0, inner.coloring.clone())
        .set(0, 0, 1)
        .set(1, 1, k + 1)
        .set(0, 1, k + 1);
    let mut targets = inner.targets.clone();
    targets.push(Matching(t));
    Ok((recipe, k + 1, targets))
}
