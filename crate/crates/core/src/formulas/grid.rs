//! Small parameter grids, one per catalog entry, on which every
//! precondition holds.

use super::FormulaParams;

fn p(pairs: &[(&str, i64)]) -> FormulaParams {
    pairs.iter().fold(FormulaParams::new(), |acc, &(k, v)| acc.with(k, v))
}

fn lists(extra: &[(&str, i64)], m_list: &[i64], k_list: &[i64]) -> FormulaParams {
    let mut out = p(extra);
    if !m_list.is_empty() {
        out = out.with_list("m_list", m_list.to_vec());
    }
    if !k_list.is_empty() {
        out = out.with_list("k_list", k_list.to_vec());
    }
    out
}

/// Grid for `id`; empty for unknown ids.
pub fn default_grid(id: &str) -> Vec<FormulaParams> {
    match id {
        "thm_SS" => vec![p(&[("b", 2), ("r", 5)]), p(&[("b", 3), ("r", 12)]), p(&[("b", 4), ("r", 9)])],
        "thm_o" => vec![
            p(&[("m", 3), ("n", 2), ("k", 2)]),
            p(&[("m", 5), ("n", 3), ("k", 3)]),
            p(&[("m", 4), ("n", 1), ("k", 6)]),
        ],
        "thm_Z" => vec![p(&[("n", 3), ("t", 4)]), p(&[("n", 3), ("t", 3)]), p(&[("n", 5), ("t", 2)])],
        "thm_i" => vec![p(&[("b", 3), ("m", 5)]), p(&[("b", 2), ("m", 2)]), p(&[("b", 4), ("m", 7)])],
        "thm_c" => vec![p(&[("b", 3), ("t", 2)]), p(&[("b", 3), ("t", 3)]), p(&[("b", 2), ("t", 5)])],
        "cor_AA" => vec![p(&[("t", 1)]), p(&[("t", 2)]), p(&[("t", 3), ("b", 3), ("r", 6)])],
        "thm_M" => vec![
            p(&[("n", 10), ("t", 1), ("r", 3)]),
            p(&[("n", 20), ("t", 2), ("r", 2)]),
            p(&[("n", 7), ("t", 3), ("r", 4)]),
        ],
        "thm_q" | "cor_q_path" => vec![
            p(&[("n_0", 100), ("n_1", 4), ("n_2", 6)]),
            p(&[("n_0", 20), ("n_1", 4), ("n_2", 4)]),
            p(&[("n_0", 30), ("n_1", 5), ("n_2", 8)]),
            p(&[("n_0", 12), ("n_1", 6), ("n_2", 8)]),
        ],
        "thm_t_case1" => vec![p(&[("s", 2), ("m", 2)]), p(&[("s", 1), ("m", 3)]), p(&[("s", 4), ("m", 2)])],
        "thm_t_case2" => vec![p(&[("s", 3), ("m", 2)]), p(&[("s", 1), ("m", 2)]), p(&[("s", 5), ("m", 6)])],
        "thm_t_case3" => vec![p(&[("s", 1), ("m", 3)]), p(&[("s", 2), ("m", 5)]), p(&[("s", 1), ("m", 7)])],
        "thm_t_case4" => vec![p(&[("s", 1), ("m", 2)]), p(&[("s", 3), ("m", 1)]), p(&[("s", 2), ("m", 5)])],
        "thm_t_case5" => vec![p(&[("s", 1)]), p(&[("s", 2)]), p(&[("s", 4)])],
        "thm_p_i" => vec![p(&[("k", 4)]), p(&[("k", 6)]), p(&[("k", 8)])],
        "thm_p_ii" => vec![
            p(&[("s", 2), ("m", 4), ("t", 5)]),
            p(&[("s", 3), ("m", 5), ("t", 7)]),
            p(&[("s", 3), ("m", 7), ("t", 9)]),
        ],
        "thm_d" => vec![
            p(&[("n", 10), ("b", 3)]),
            lists(&[("n", 8)], &[2, 2], &[2]),
            lists(&[("n", 12)], &[3], &[]),
        ],
        "lem_f" => vec![
            lists(&[], &[2, 2], &[2]),
            lists(&[], &[3, 2], &[]),
            lists(&[], &[2], &[3, 2]),
            lists(&[], &[4, 3], &[2, 2]),
        ],
        "thm_Far" | "cor_s" => vec![
            lists(&[("n", 10)], &[2, 2], &[2]),
            lists(&[("n", 8)], &[3], &[]),
            lists(&[("n", 12)], &[2, 3], &[2, 2]),
        ],
        "lem_h" => vec![p(&[("m", 2), ("n", 3)]), p(&[("m", 1), ("n", 1)]), p(&[("m", 4), ("n", 4)])],
        "thm_h1" | "thm_h1_path" => {
            vec![p(&[("n", 8), ("k", 2)]), p(&[("n", 6), ("k", 3)]), p(&[("n", 12), ("k", 3)])]
        }
        "lem_RE" => vec![
            lists(&[("m", 8)], &[], &[6]),
            lists(&[("m", 7)], &[], &[4, 4]),
            lists(&[("m", 7)], &[], &[5]),
            lists(&[("m", 8)], &[], &[4]),
            lists(&[("m", 8)], &[], &[2]),
        ],
        "thm_stripe_star" => vec![
            lists(&[("m", 6), ("t", 2)], &[], &[2]),
            lists(&[("m", 8), ("t", 3)], &[], &[2]),
            lists(&[("m", 10), ("t", 5)], &[], &[2, 2]),
        ],
        "thm_p3c2n" => vec![p(&[("n", 3), ("t", 2)]), p(&[("n", 4), ("t", 1)]), p(&[("n", 5), ("t", 5)])],
        "ref_p3c2n" => vec![p(&[("n", 2)]), p(&[("n", 3)]), p(&[("n", 6)])],
        "bip_p3c2n" => vec![p(&[("n", 3)]), p(&[("n", 4)]), p(&[("n", 6)])],
        "thm_z" => vec![p(&[("m", 4)]), p(&[("m", 5)]), p(&[("m", 9)])],
        "thm_tk2_cn" => vec![p(&[("t", 2), ("n", 5)]), p(&[("t", 4), ("n", 6)]), p(&[("t", 1), ("n", 3)])],
        "thm_c2m_c4_1" => vec![p(&[("m", 4), ("t", 5)]), p(&[("m", 4), ("t", 7)]), p(&[("m", 5), ("t", 6)])],
        "thm_c2m_c4_2" => vec![p(&[("m", 4), ("t", 3)]), p(&[("m", 4), ("t", 1)]), p(&[("m", 6), ("t", 6)])],
        "ref_pp" => vec![p(&[("n", 3), ("m", 3)]), p(&[("n", 4), ("m", 4)]), p(&[("n", 5), ("m", 9)])],
        "ref_cp" => vec![p(&[("n_0", 6), ("n_1", 4)]), p(&[("n_0", 7), ("n_1", 3)]), p(&[("n_0", 10), ("n_1", 7)])],
        "ref_cn_kk2" => vec![p(&[("n", 6), ("k", 2)]), p(&[("n", 5), ("k", 1)]), p(&[("n", 9), ("k", 4)])],
        "ref_tk2_p" => vec![p(&[("k", 6)]), p(&[("k", 5)]), p(&[("t", 5), ("s", 2)]), p(&[("t", 3), ("s", 1)])],
        _ => Vec::new(),
    }
}
