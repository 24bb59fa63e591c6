//! The formula table. Each entry logs its preconditions through [`Ctx`] and
//! returns the value it would have if they all hold; `eval_formula` discards
//! the value otherwise.

use super::{lambda, sigma, Ctx, FormulaValue};
use crate::error::{Error, Result};

type EvalFn = fn(&mut Ctx) -> Result<FormulaValue>;

pub struct CatalogEntry {
    pub id: &'static str,
    pub statement: &'static str,
    /// Parameter names the entry reads (optional ones in brackets).
    pub params: &'static str,
    pub large_n: bool,
    pub(crate) eval: EvalFn,
}

impl std::fmt::Debug for CatalogEntry {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CatalogEntry").field("id", &self.id).finish_non_exhaustive()
    }
}

macro_rules! entry {
    ($id:literal, $large:literal, $params:literal, $stmt:literal, $f:expr) => {
        CatalogEntry { id: $id, statement: $stmt, params: $params, large_n: $large, eval: $f }
    };
}

static CATALOG: &[CatalogEntry] = &[
    entry!("thm_SS", false, "b r", "R(H,G_1..G_k) <= R(H,K_{b,b}) = r, b = b(G_1..G_k)", thm_ss),
    entry!("thm_o", false, "m n k", "R(P_m,K_{n,k}) <= k+n+m-2", thm_o),
    entry!("thm_Z", false, "t n", "R(tK_2,K_{n,n}) = max{n+2t-1, 2n+t-1}", thm_z_cap),
    entry!("thm_i", false, "b m", "R(P_m,G_1..G_k) <= 2b+m-2", thm_i),
    entry!("thm_c", false, "b t", "R(tK_2,G_1..G_k) <= 2b+t-1 (t <= b), b+2t-1 (t >= b)", thm_c),
    entry!("cor_AA", false, "t [b r]", "R(tK_2,G_1..G_k) = 3t-1 when R(G_1..G_k) = 2b = 2t", cor_aa),
    entry!("thm_M", true, "n t r", "R(C_n,K^{t+1}_r) = t(n-1)+r", thm_m),
    entry!("thm_q", true, "n_0 n_1 n_2 [s m]", "R(C_n0,P_n1,P_n2) = n_0+floor(n_1/2)+floor(n_2/2)-2", thm_q),
    entry!("cor_q_path", true, "n_0 n_1 n_2 [s m]", "R(P_n0,P_n1,P_n2) = n_0+floor(n_1/2)+floor(n_2/2)-2", cor_q_path),
    entry!("thm_t_case1", false, "s m", "b(P_2s,P_2m) = (s+m-1, s+m-1)", thm_t1),
    entry!("thm_t_case2", false, "s m", "b(P_2s+1,P_2m) = (s+m, s+m-1) for s >= m-1", thm_t2),
    entry!("thm_t_case3", false, "s m", "b(P_2s+1,P_2m) = (s+m-1, s+m-1) for s < m-1", thm_t3),
    entry!("thm_t_case4", false, "s m", "b(P_2s+1,P_2m+1) = (s+m, s+m-1) for s != m", thm_t4),
    entry!("thm_t_case5", false, "s", "b(P_2s+1,P_2s+1) = (2s+1, 2s-1)", thm_t5),
    entry!("thm_p_i", false, "k", "R((k-1)K_2,P_k,P_k) = 3k-4 for even k", thm_p_i),
    entry!("thm_p_ii", false, "s m t", "R(tK_2,P_2s+1,P_2m) = s+m+2t-2", thm_p_ii),
    entry!("thm_d", true, "n [b] [m_list k_list]", "R(C_n,K_{1,k_i}..,m_jK_2..) <= n+b-1", thm_d),
    entry!("lem_f", false, "m_list k_list", "b(K_{1,k_i}..,m_jK_2..) = Lambda+1 or Sigma+floor(Lambda/2)+1", lem_f),
    entry!("thm_Far", true, "n m_list k_list", "R(C_n,K_{1,k_i}..,m_jK_2..) = n+Lambda", thm_far),
    entry!("cor_s", true, "n m_list k_list", "R(P_n,K_{1,k_i}..,m_jK_2..) = n+Lambda", cor_s),
    entry!("lem_h", false, "m n", "b(mK_2,nK_2) = m+n-1", lem_h),
    entry!("thm_h1", true, "n k", "R(C_n,kK_2,kK_2) = n+2k-2", thm_h1),
    entry!("thm_h1_path", true, "n k", "R(P_n,kK_2,kK_2) = n+2k-2", thm_h1_path),
    entry!("lem_RE", false, "m k_list", "b(P_m,K_{1,k_1}..K_{1,k_r}), five cases", lem_re),
    entry!("thm_stripe_star", false, "m t k_list", "R(tK_2,P_m,K_{1,k_1}..K_{1,k_r}) = m+t-1", thm_stripe_star),
    entry!("thm_p3c2n", false, "n t", "R(tK_2,P_3,C_2n) = 2n+t-1 for t <= n, n >= 3", thm_p3c2n),
    entry!("ref_p3c2n", false, "n", "R(P_3,C_2n) = 2n", ref_p3c2n),
    entry!("bip_p3c2n", false, "n", "b(P_3,C_2n) = n for n >= 3", bip_p3c2n),
    entry!("thm_z", false, "m", "b(C_2m,K_{2,2}) = m+1 for m >= 4", thm_z),
    entry!("thm_tk2_cn", false, "t n", "R(tK_2,C_n) = max{n+2t-1-floor(n/2), n+t-1}", thm_tk2_cn),
    entry!("thm_c2m_c4_1", false, "m t", "R(tK_2,C_2m,C_4) = m+2t for t >= m+1", thm_c2m_c4_1),
    entry!("thm_c2m_c4_2", false, "m t", "2m+t <= R(tK_2,C_2m,C_4) <= 2m+t+1 for t <= m", thm_c2m_c4_2),
    entry!("ref_pp", false, "n m", "R(P_n,P_m) = m+floor(n/2)-1 for m >= n >= 2", ref_pp),
    entry!("ref_cp", false, "n_0 n_1", "R(C_n0,P_n1) = n_0+floor(n_1/2)-1 for n_0 >= n_1 >= 2, n_0 even or n_0+floor(n_1/2) >= 2n_1", ref_cp),
    entry!("ref_cn_kk2", false, "n k", "R(C_n,kK_2) = n+k-1 for k <= floor(n/2)", ref_cn_kk2),
    entry!("ref_tk2_p", false, "k | t s", "R((k-1)K_2,P_k) = 2k+floor(k/2)-3; R(tK_2,P_2s+1) = 2t+s-1 for t > s", ref_tk2_p),
];

pub fn catalog() -> &'static [CatalogEntry] {
    CATALOG
}

pub fn lookup(id: &str) -> Option<&'static CatalogEntry> {
    CATALOG.iter().find(|e| e.id == id)
}

fn exact(value: i64) -> Result<FormulaValue> {
    Ok(FormulaValue::Exact { value })
}

fn upper(value: i64) -> Result<FormulaValue> {
    Ok(FormulaValue::Upper { value })
}

fn pair(first: i64, second: i64) -> Result<FormulaValue> {
    Ok(FormulaValue::Pair { first, second })
}

fn at_least(c: &mut Ctx, name: &str, v: i64, lo: i64) {
    c.check(format!("{name} >= {lo}"), v >= lo);
}

fn thm_ss(c: &mut Ctx) -> Result<FormulaValue> {
    let (b, r) = (c.int("b")?, c.int("r")?);
    at_least(c, "b", b, 1);
    at_least(c, "r", r, 1);
    upper(r)
}

fn thm_o(c: &mut Ctx) -> Result<FormulaValue> {
    let (m, n, k) = (c.int("m")?, c.int("n")?, c.int("k")?);
    at_least(c, "m", m, 1);
    at_least(c, "n", n, 1);
    at_least(c, "k", k, 1);
    upper(k + n + m - 2)
}

fn thm_z_cap(c: &mut Ctx) -> Result<FormulaValue> {
    let (t, n) = (c.int("t")?, c.int("n")?);
    at_least(c, "t", t, 1);
    at_least(c, "n", n, 1);
    exact((n + 2 * t - 1).max(2 * n + t - 1))
}

fn thm_i(c: &mut Ctx) -> Result<FormulaValue> {
    let (b, m) = (c.int("b")?, c.int("m")?);
    at_least(c, "b", b, 1);
    at_least(c, "m", m, 1);
    upper(2 * b + m - 2)
}

fn thm_c(c: &mut Ctx) -> Result<FormulaValue> {
    let (b, t) = (c.int("b")?, c.int("t")?);
    at_least(c, "b", b, 1);
    at_least(c, "t", t, 1);
    if t <= b {
        upper(2 * b + t - 1)
    } else {
        upper(b + 2 * t - 1)
    }
}

fn cor_aa(c: &mut Ctx) -> Result<FormulaValue> {
    let t = c.int("t")?;
    at_least(c, "t", t, 1);
    if let Some(b) = c.opt("b") {
        c.check("b(G_1..G_k) = t", b == t);
    }
    if let Some(r) = c.opt("r") {
        c.check("R(G_1..G_k) = 2t", r == 2 * t);
    }
    exact(3 * t - 1)
}

fn thm_m(c: &mut Ctx) -> Result<FormulaValue> {
    let (n, t, r) = (c.int("n")?, c.int("t")?, c.int("r")?);
    at_least(c, "n", n, 3);
    at_least(c, "t", t, 1);
    at_least(c, "r", r, 1);
    exact(t * (n - 1) + r)
}

/// Shared body of the cycle and path versions: validates the three cases and
/// the derived `s`, `m`.
fn q_value(c: &mut Ctx, min_n0: i64) -> Result<FormulaValue> {
    let (n0, n1, n2) = (c.int("n_0")?, c.int("n_1")?, c.int("n_2")?);
    let s = c.derived("s", n1.div_euclid(2), "n_1")?;
    c.check("n_2 = 2m is even", n2.rem_euclid(2) == 0);
    let m = if n2.rem_euclid(2) == 0 { c.derived("m", n2 / 2, "n_2")? } else { n2 / 2 };
    at_least(c, "n_1", n1, 2);
    at_least(c, "n_0", n0, min_n0);
    c.check("n_0 >= n_1", n0 >= n1);
    let case1 = n1 % 2 == 0 && m - 1 < 2 * s;
    let case2 = n1 % 2 == 0 && n1 == n2;
    let case3 = n1 % 2 == 1 && s < m - 1 && m - 1 < 2 * s + 1;
    let holds = case1 || case2 || case3;
    c.check(
        "case 1 (n_1 = 2s, m-1 < 2s), case 2 (n_1 = n_2 = 2s) or case 3 (n_1 = 2s+1, s < m-1 < 2s+1)",
        holds,
    );
    if holds {
        let which: Vec<&str> = [(case1, "1"), (case2, "2"), (case3, "3")]
            .iter()
            .filter(|(h, _)| *h)
            .map(|&(_, n)| n)
            .collect();
        c.note(format!("case {} with s = {s}, m = {m}", which.join(", ")));
    }
    exact(n0 + n1.div_euclid(2) + n2.div_euclid(2) - 2)
}

fn thm_q(c: &mut Ctx) -> Result<FormulaValue> {
    q_value(c, 3)
}

fn cor_q_path(c: &mut Ctx) -> Result<FormulaValue> {
    q_value(c, 2)
}

fn sm(c: &mut Ctx) -> Result<(i64, i64)> {
    let (s, m) = (c.int("s")?, c.int("m")?);
    at_least(c, "s", s, 1);
    at_least(c, "m", m, 1);
    Ok((s, m))
}

fn thm_t1(c: &mut Ctx) -> Result<FormulaValue> {
    let (s, m) = sm(c)?;
    pair(s + m - 1, s + m - 1)
}

fn thm_t2(c: &mut Ctx) -> Result<FormulaValue> {
    let (s, m) = sm(c)?;
    c.check("s >= m-1", s >= m - 1);
    pair(s + m, s + m - 1)
}

fn thm_t3(c: &mut Ctx) -> Result<FormulaValue> {
    let (s, m) = sm(c)?;
    c.check("s < m-1", s < m - 1);
    pair(s + m - 1, s + m - 1)
}

fn thm_t4(c: &mut Ctx) -> Result<FormulaValue> {
    let (s, m) = sm(c)?;
    c.check("s != m", s != m);
    pair(s + m, s + m - 1)
}

fn thm_t5(c: &mut Ctx) -> Result<FormulaValue> {
    let s = c.int("s")?;
    at_least(c, "s", s, 1);
    pair(2 * s + 1, 2 * s - 1)
}

fn thm_p_i(c: &mut Ctx) -> Result<FormulaValue> {
    let k = c.int("k")?;
    at_least(c, "k", k, 2);
    c.check("k is even", k % 2 == 0);
    exact(3 * k - 4)
}

fn thm_p_ii(c: &mut Ctx) -> Result<FormulaValue> {
    let (s, m, t) = (c.int("s")?, c.int("m")?, c.int("t")?);
    at_least(c, "s", s, 1);
    at_least(c, "t", t, 1);
    c.check("s < m-1", s < m - 1);
    c.check("m-1 < 2s+1", m - 1 < 2 * s + 1);
    c.check("t >= m+s-1", t >= m + s - 1);
    exact(s + m + 2 * t - 2)
}

/// `Λ`, `Σ` from the lists, with positivity checks. A missing list is empty.
fn lists(c: &mut Ctx) -> Result<(i64, i64)> {
    if !c.has("m_list") && !c.has("k_list") {
        return Err(c.list("m_list").unwrap_err());
    }
    let ms = c.opt_list("m_list").unwrap_or_default();
    let ks = c.opt_list("k_list").unwrap_or_default();
    c.check("every m_i >= 1", ms.iter().all(|&v| v >= 1));
    c.check("every k_i >= 1", ks.iter().all(|&v| v >= 1));
    Ok((lambda(&ms), sigma(&ks)))
}

fn lem_f_value(lam: i64, sig: i64) -> i64 {
    if sig < (lam + 1).div_euclid(2) {
        lam + 1
    } else {
        sig + lam.div_euclid(2) + 1
    }
}

fn lem_f(c: &mut Ctx) -> Result<FormulaValue> {
    let (lam, sig) = lists(c)?;
    c.note(format!("Lambda = {lam}, Sigma = {sig}"));
    exact(lem_f_value(lam, sig))
}

fn thm_d(c: &mut Ctx) -> Result<FormulaValue> {
    let n = c.int("n")?;
    at_least(c, "n", n, 3);
    let b = match c.opt("b") {
        Some(b) => {
            if c.has("m_list") || c.has("k_list") {
                let (lam, sig) = lists(c)?;
                c.derived("b", lem_f_value(lam, sig), "m_list, k_list")?;
            }
            b
        }
        None => {
            let (lam, sig) = lists(c)?;
            lem_f_value(lam, sig)
        }
    };
    at_least(c, "b", b, 1);
    upper(n + b - 1)
}

fn far_value(c: &mut Ctx, min_n: i64) -> Result<FormulaValue> {
    let n = c.int("n")?;
    at_least(c, "n", n, min_n);
    let (lam, sig) = lists(c)?;
    c.check("Sigma <= floor((Lambda+1)/2)", sig <= (lam + 1).div_euclid(2));
    c.note(format!("Lambda = {lam}, Sigma = {sig}"));
    exact(n + lam)
}

fn thm_far(c: &mut Ctx) -> Result<FormulaValue> {
    far_value(c, 3)
}

fn cor_s(c: &mut Ctx) -> Result<FormulaValue> {
    far_value(c, 2)
}

fn lem_h(c: &mut Ctx) -> Result<FormulaValue> {
    let (m, n) = (c.int("m")?, c.int("n")?);
    at_least(c, "m", m, 1);
    at_least(c, "n", n, 1);
    exact(m + n - 1)
}

fn h1_value(c: &mut Ctx, min_n: i64) -> Result<FormulaValue> {
    let (n, k) = (c.int("n")?, c.int("k")?);
    at_least(c, "n", n, min_n);
    at_least(c, "k", k, 1);
    c.check("k <= floor(n/2)", k <= n.div_euclid(2));
    exact(n + 2 * k - 2)
}

fn thm_h1(c: &mut Ctx) -> Result<FormulaValue> {
    h1_value(c, 3)
}

fn thm_h1_path(c: &mut Ctx) -> Result<FormulaValue> {
    h1_value(c, 2)
}

/// The five cases, compared in doubled arithmetic; the first one that holds
/// wins. `None` when no case covers `(m, Σ)`.
pub(crate) fn lem_re_value(m: i64, sig: i64) -> Option<(u8, i64)> {
    let half = m / 2;
    if m % 2 == 0 && 2 * sig >= m {
        return Some((1, sig + m / 2));
    }
    if m % 2 == 1 && m >= 3 && 2 * sig >= m - 1 {
        let q = (m - 1) / 2;
        return Some(if sig % q == 0 { (2, sig + (m + 1) / 2) } else { (3, sig + (m - 1) / 2) });
    }
    if half + 2 <= 2 * sig && sig < half + 1 {
        return Some((4, 2 * sig + 1));
    }
    if 2 * sig < half {
        return Some((5, (m + 1) / 2));
    }
    None
}

fn lem_re(c: &mut Ctx) -> Result<FormulaValue> {
    let m = c.int("m")?;
    let ks = c.list("k_list")?;
    at_least(c, "m", m, 2);
    c.check("k_list is non-empty", !ks.is_empty());
    c.check("every k_i >= 2", ks.iter().all(|&k| k >= 2));
    let sig = sigma(&ks);
    match lem_re_value(m, sig) {
        Some((case, v)) => {
            c.check(format!("case {case} applies (Sigma = {sig})"), true);
            exact(v)
        }
        None => {
            c.check(format!("one of the five cases applies (Sigma = {sig}, m = {m})"), false);
            exact(0)
        }
    }
}

fn thm_stripe_star(c: &mut Ctx) -> Result<FormulaValue> {
    let (m, t) = (c.int("m")?, c.int("t")?);
    let ks = c.list("k_list")?;
    c.check("m = 2s is even", m % 2 == 0);
    c.check("2 <= t <= m/2", 2 <= t && t <= m / 2);
    c.check("k_list is non-empty", !ks.is_empty());
    c.check("every k_i >= 2", ks.iter().all(|&k| k >= 2));
    c.check("Sigma < floor(m/2)/2", 2 * sigma(&ks) < m.div_euclid(2));
    exact(m + t - 1)
}

fn thm_p3c2n(c: &mut Ctx) -> Result<FormulaValue> {
    let (n, t) = (c.int("n")?, c.int("t")?);
    // b(P_3,C_4) = 4, and R(2K_2,P_3,C_4) = 6 > 5.
    at_least(c, "n", n, 3);
    at_least(c, "t", t, 1);
    c.check("t <= n", t <= n);
    exact(2 * n + t - 1)
}

fn ref_p3c2n(c: &mut Ctx) -> Result<FormulaValue> {
    let n = c.int("n")?;
    at_least(c, "n", n, 2);
    exact(2 * n)
}

fn bip_p3c2n(c: &mut Ctx) -> Result<FormulaValue> {
    let n = c.int("n")?;
    // K_{3,3} minus a perfect matching is C_6, so b(P_3,C_4) = 4.
    at_least(c, "n", n, 3);
    exact(n)
}

fn thm_z(c: &mut Ctx) -> Result<FormulaValue> {
    let m = c.int("m")?;
    at_least(c, "m", m, 4);
    exact(m + 1)
}

pub(crate) fn tk2_cn(t: i64, n: i64) -> i64 {
    (n + 2 * t - 1 - n.div_euclid(2)).max(n + t - 1)
}

fn thm_tk2_cn(c: &mut Ctx) -> Result<FormulaValue> {
    let (t, n) = (c.int("t")?, c.int("n")?);
    at_least(c, "n", n, 3);
    at_least(c, "t", t, 1);
    exact(tk2_cn(t, n))
}

fn thm_c2m_c4_1(c: &mut Ctx) -> Result<FormulaValue> {
    let (m, t) = (c.int("m")?, c.int("t")?);
    at_least(c, "m", m, 4);
    c.check("t >= m+1", t >= m + 1);
    exact(m + 2 * t)
}

fn thm_c2m_c4_2(c: &mut Ctx) -> Result<FormulaValue> {
    let (m, t) = (c.int("m")?, c.int("t")?);
    at_least(c, "m", m, 4);
    at_least(c, "t", t, 1);
    c.check("t <= m", t <= m);
    Ok(FormulaValue::Bracket { lower: 2 * m + t, upper: 2 * m + t + 1 })
}

fn ref_pp(c: &mut Ctx) -> Result<FormulaValue> {
    let (n, m) = (c.int("n")?, c.int("m")?);
    at_least(c, "n", n, 2);
    c.check("m >= n", m >= n);
    exact(m + n.div_euclid(2) - 1)
}

fn ref_cp(c: &mut Ctx) -> Result<FormulaValue> {
    let (n0, n1) = (c.int("n_0")?, c.int("n_1")?);
    at_least(c, "n_0", n0, 3);
    at_least(c, "n_1", n1, 2);
    c.check("n_0 >= n_1", n0 >= n1);
    // Odd cycles also force 2n_1-1 (color 1 = K_{n_1-1,n_1-1}).
    c.check("n_0 even or n_0+floor(n_1/2) >= 2n_1", n0 % 2 == 0 || n0 + n1.div_euclid(2) >= 2 * n1);
    exact(n0 + n1.div_euclid(2) - 1)
}

fn ref_cn_kk2(c: &mut Ctx) -> Result<FormulaValue> {
    let (n, k) = (c.int("n")?, c.int("k")?);
    at_least(c, "n", n, 3);
    at_least(c, "k", k, 1);
    c.check("k <= floor(n/2)", k <= n.div_euclid(2));
    exact(n + k - 1)
}

fn ref_tk2_p(c: &mut Ctx) -> Result<FormulaValue> {
    if let Some(k) = c.opt("k") {
        if c.has("t") || c.has("s") {
            return Err(Error::InconsistentParams {
                id: "ref_tk2_p".into(),
                detail: "give either k, or t and s".into(),
            });
        }
        at_least(c, "k", k, 2);
        return exact(2 * k + k.div_euclid(2) - 3);
    }
    let (t, s) = (c.int("t")?, c.int("s")?);
    at_least(c, "s", s, 1);
    c.check("t > s", t > s);
    exact(2 * t + s - 1)
}
