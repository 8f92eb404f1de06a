//! The identity suite behind the `verify` subcommand. Each entry is one
//! named pass/fail line; an error while computing counts as a failure.

use std::collections::BTreeMap;

use crate::arith::{q, Rational};
use crate::closed_forms::{
    c_master, genus_three_triple_poly, nf3_case_polys, standard_zeta, t_sum, t_sum_poly,
};
use crate::driver::{consistency_check_published, n_g0, solve_ngd, EquationInputs};
use crate::error::Result;
use crate::identities::{case_e_via_ck, t_sum_via_ck, three_way_agreement, Check};
use crate::pairs::{enumerate_s_prime, has_outside_element, EnumerationLimits, GdKey, PairSet};
use crate::solver::{assemble_master, b_combination, build_fmatrix, solve_crho, SolverLimits};

fn run(name: &str, f: impl FnOnce() -> Result<bool>) -> Check {
    match f() {
        Ok(pass) => Check::new(name, pass),
        Err(e) => Check::new(format!("{name} [{e}]"), false),
    }
}

fn key(g: u32, d: u32) -> Result<GdKey> {
    GdKey::new(g, d)
}

/// Master coefficient through the closure solve for `d <= max_d`, and through
/// the dense matrix for `d <= dense_d`.
fn master_pipeline(g: u32, max_d: u32, dense_d: u32) -> Result<bool> {
    let mut ok = true;
    for d in 1..=max_d {
        let k = key(g, d)?;
        let zeta = standard_zeta(k)?;
        let want = c_master(g, d)?;
        let sol = solve_crho(k, &zeta)?;
        ok &= b_combination(&sol)? == want;
        ok &= assemble_master(k, &zeta)?.n_coefficient == want;
        if d <= dense_d {
            let dense = build_fmatrix(k, SolverLimits::default())?.solve(&zeta)?;
            ok &= dense == sol && b_combination(&dense)? == want;
        }
    }
    Ok(ok)
}

fn pow5(s: u8) -> i64 {
    5i64.pow(s as u32)
}

/// The closed-form `C_rho` tables, merged where families coincide.
pub fn expected_coefficients(k: GdKey) -> Result<BTreeMap<PairSet, Rational>> {
    let d = k.d;
    let dd = d as i64;
    let mut want: BTreeMap<PairSet, Rational> = BTreeMap::new();
    match k.g {
        2 => {
            for m in 0..=3u8 {
                want.insert(
                    PairSet::new(&[(5 * d - 1 - m as u32, m)])?,
                    Rational::from(pow5(m) * (5 * dd - m as i64)),
                );
            }
        }
        _ => {
            for s in 0..=3u8 {
                let si = s as i64;
                let c1 = Rational::from((5 * dd - 1 - si) * (si + 1) * pow5(s)) * (q(si, 2) - Rational::from(5 * dd));
                *want.entry(PairSet::new(&[(5 * d - 2 - s as u32, s)])?).or_default() += c1;
                if s <= 2 {
                    *want.entry(PairSet::new(&[(5 * d - 4, 0), (2 - s as u32, s)])?).or_default() +=
                        Rational::from((3 - si) * pow5(s));
                }
                if 5 * dd - 3 - si >= 0 {
                    *want.entry(PairSet::new(&[((5 * dd - 3 - si) as u32, s), (1, 0)])?).or_default() +=
                        Rational::from(2 * (5 * dd - 2 - si) * pow5(s));
                }
            }
        }
    }
    want.retain(|_, c| !c.is_zero());
    Ok(want)
}

fn collapse_and_feasibility() -> Result<bool> {
    let mut ok = true;
    for (g, d) in [(2, 1), (3, 1), (2, 2)] {
        let k = key(g, d)?;
        for zeta in enumerate_s_prime(k, EnumerationLimits::default())? {
            let sol = solve_crho(k, &zeta)?;
            ok &= sol.coeffs.len() == 1 && sol.get(&zeta) == Rational::one();
            let eq = assemble_master(k, &zeta)?;
            ok &= eq.collapsed && eq.n_coefficient.is_zero();
        }
    }
    for g in 0..=6u32 {
        for d in 1..=3u32 {
            ok &= has_outside_element(key(g, d)?) == (5 * d as i64 >= 2 * g as i64 - 1);
        }
    }
    Ok(ok)
}

/// All eleven acceptance identities, in order.
pub fn acceptance_checks() -> Vec<Check> {
    let mut out = Vec::new();
    out.push(run("1 N_{2,1} from the published inputs is 2875/240", || {
        let inp = EquationInputs::published_2_1();
        Ok(solve_ngd(inp.key, &inp)? == q(2875, 240))
    }));
    out.push(run("2 genus-2 master coefficient 4(5d-1)(5d-2), d = 1..8", || master_pipeline(2, 8, 2)));
    out.push(run("3 genus-3 master coefficient 24(5d-3)(5d-4), d = 1..8", || master_pipeline(3, 8, 2)));
    out.push(run("4 C_rho closed-form tables, d = 1..5", || {
        let mut ok = true;
        for g in [2, 3] {
            for d in 1..=5 {
                let k = key(g, d)?;
                ok &= solve_crho(k, &standard_zeta(k)?)?.coeffs == expected_coefficients(k)?;
            }
        }
        Ok(ok)
    }));
    out.push(run("5 genus-3 case polynomials sum to the quartic", || {
        Ok(nf3_case_polys().total() == genus_three_triple_poly())
    }));
    out.push(run("6 T_D sums to the sextic, d = 1..5", || {
        let mut ok = true;
        for d in 1..=5 {
            let v = t_sum(d)?;
            ok &= v == t_sum_poly().eval_int(d as i64) && v == t_sum_via_ck(d)?;
            ok &= case_e_via_ck(d)? == nf3_case_polys().case_e.eval_int(d as i64);
        }
        Ok(ok)
    }));
    out.push(run("7 pairing matrix triangular with |Aut| diagonal: (2,1), (2,2), (3,1)", || {
        for (g, d) in [(2, 1), (2, 2), (3, 1)] {
            build_fmatrix(key(g, d)?, SolverLimits::default())?;
        }
        Ok(true)
    }));
    out.push(run("8 C_k direct = closed = series, k <= 4, m <= 30", || {
        Ok(three_way_agreement(4, 30)?.iter().all(|c| c.pass))
    }));
    out.push(run("9 indicator solution on S' and outside-element criterion", collapse_and_feasibility));
    out.push(run("10 published N-coefficients 0, 0, 1, 45, 293 match B", || {
        Ok(consistency_check_published(&EquationInputs::published_2_1())?.iter().all(|c| c.pass))
    }));
    out.push(run("11 degree-zero values and linearity in chi", || {
        let mut ok = n_g0(2, -200)? == q(-5, 144) && n_g0(3, -200)? == q(5, 36288);
        for g in 2..=6 {
            ok &= n_g0(g, -200)? + n_g0(g, 77)? == n_g0(g, -123)?;
        }
        Ok(ok)
    }));
    out
}
