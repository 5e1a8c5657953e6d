#![allow(clippy::needless_range_loop)]

use std::collections::BTreeMap;

use serde::Serialize;

use crate::grassmann::{Expression, FieldAtom, Slot, Symbol};
use crate::scalar::Scalar;

use super::contract::Spinor;
use super::tables::{dn, mat_mul, mat_sub, trace, up, Eps4, Mat2, PauliTables};

/// One failed instance of an identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub identity_name: String,
    /// Free index values in the order the identity lists them; spinor
    /// indices are reported as 1 and 2, vector indices as 0..3.
    pub index_tuple: Vec<u8>,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of an exhaustive identity check: how many instances of each
/// identity were evaluated, and which of them failed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ViolationReport {
    pub evaluated: BTreeMap<String, usize>,
    pub violations: Vec<Violation>,
}

impl ViolationReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn total_evaluated(&self) -> usize {
        self.evaluated.values().sum()
    }

    pub fn merge(&mut self, other: ViolationReport) {
        for (k, v) in other.evaluated {
            *self.evaluated.entry(k).or_default() += v;
        }
        self.violations.extend(other.violations);
    }

    pub fn check<T: PartialEq + ToString>(&mut self, name: &str, index_tuple: &[u8], lhs: &T, rhs: &T) {
        *self.evaluated.entry(name.to_string()).or_default() += 1;
        if lhs != rhs {
            self.violations.push(Violation {
                identity_name: name.to_string(),
                index_tuple: index_tuple.to_vec(),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
        }
    }
}

fn s(n: i64) -> Scalar {
    Scalar::int(n)
}

fn delta(a: usize, b: usize) -> Scalar {
    s((a == b) as i64)
}

/// Spinor index as reported (1 or 2).
fn sp(a: usize) -> u8 {
    a as u8 + 1
}

/// σ^μ as a matrix `[α][α̇]`.
fn sigma_mat(t: &PauliTables, mu: super::tables::VIdx) -> Mat2 {
    std::array::from_fn(|a| std::array::from_fn(|ad| t.sigma(mu, a, ad)))
}

/// σ̄^μ as a matrix `[α̇][α]`.
fn sigma_bar_mat(t: &PauliTables, mu: super::tables::VIdx) -> Mat2 {
    std::array::from_fn(|ad| std::array::from_fn(|a| t.sigma_bar(mu, ad, a)))
}

/// (σ_μσ̄_ν − σ_νσ̄_μ)_α^β.
fn sigma_commutator(t: &PauliTables, mu: u8, nu: u8) -> Mat2 {
    mat_sub(
        &mat_mul(&sigma_mat(t, dn(mu)), &sigma_bar_mat(t, dn(nu))),
        &mat_mul(&sigma_mat(t, dn(nu)), &sigma_bar_mat(t, dn(mu))),
    )
}

/// (σ̄_μσ_ν − σ̄_νσ_μ)^α̇_β̇.
fn sigma_bar_commutator(t: &PauliTables, mu: u8, nu: u8) -> Mat2 {
    mat_sub(
        &mat_mul(&sigma_bar_mat(t, dn(mu)), &sigma_mat(t, dn(nu))),
        &mat_mul(&sigma_bar_mat(t, dn(nu)), &sigma_mat(t, dn(mu))),
    )
}

fn scale_mat(m: &Mat2, c: &Scalar) -> Mat2 {
    std::array::from_fn(|i| std::array::from_fn(|j| &m[i][j] * c))
}

/// Spinor representation generators S_{μν} and S̄_{μν}, built from a set of
/// Pauli tables.
#[derive(Clone, Debug, PartialEq)]
pub struct LorentzGenerators {
    /// (S_{μν})_α^β = (i/4)(σ_μσ̄_ν − σ_νσ̄_μ)_α^β.
    pub s: [[Mat2; 4]; 4],
    /// (S̄_{μν})^α̇_β̇ = (i/4)(σ̄_μσ_ν − σ̄_νσ_μ)^α̇_β̇.
    pub s_bar: [[Mat2; 4]; 4],
    pub tables: PauliTables,
}

impl LorentzGenerators {
    pub fn from_tables(tables: &PauliTables) -> Self {
        let quarter_i = Scalar::imag(1, 4);
        let s = std::array::from_fn(|mu| {
            std::array::from_fn(|nu| scale_mat(&sigma_commutator(tables, mu as u8, nu as u8), &quarter_i))
        });
        let s_bar = std::array::from_fn(|mu| {
            std::array::from_fn(|nu| scale_mat(&sigma_bar_commutator(tables, mu as u8, nu as u8), &quarter_i))
        });
        LorentzGenerators { s, s_bar, tables: tables.clone() }
    }
}

/// Hermiticity, the conjugate-matrix relations, the σσ̄ contractions, the
/// Clifford relations, the trace and the triple product, evaluated for every
/// index assignment.
pub fn verify_pauli_identities(tables: &PauliTables) -> ViolationReport {
    let t = tables;
    let mut r = ViolationReport::default();
    let i = Scalar::i();

    for mu in 0..4u8 {
        for a in 0..2 {
            for ad in 0..2 {
                let idx = [mu, sp(a), sp(ad)];
                // (σ^μ_{αα̇})* = σ^μ_{α̇α} read as a matrix
                r.check("hermiticity", &idx, &t.sigma(up(mu), a, ad).conj(), &t.sigma(up(mu), ad, a));
                // σ̄^μ_{α̇α} with lowered indices equals σ^μ_{αα̇}
                let mut lowered = Scalar::zero();
                for bd in 0..2 {
                    for b in 0..2 {
                        lowered += &(&(&t.sigma_bar(up(mu), bd, b) * &t.eps_lower[bd][ad]) * &t.eps_lower[b][a]);
                    }
                }
                r.check("hermit1", &idx, &lowered, &t.sigma(up(mu), a, ad));
                // σ̄^{μα̇α} = ε^{α̇β̇} ε^{αβ} σ^μ_{ββ̇}
                let mut raised = Scalar::zero();
                for bd in 0..2 {
                    for b in 0..2 {
                        raised += &(&(&t.eps_upper[ad][bd] * &t.eps_upper[a][b]) * &t.sigma(up(mu), b, bd));
                    }
                }
                r.check("ovsig", &[mu, sp(ad), sp(a)], &t.sigma_bar(up(mu), ad, a), &raised);
                let sign = if mu == 0 { s(1) } else { s(-1) };
                r.check(
                    "ovsig-numeric",
                    &[mu, sp(ad), sp(a)],
                    &t.sigma_bar[mu as usize][ad][a],
                    &(&t.sigma[mu as usize][ad][a] * &sign),
                );
            }
        }
    }

    for ad in 0..2 {
        for a in 0..2 {
            for b in 0..2 {
                for bd in 0..2 {
                    let mut lhs = Scalar::zero();
                    for mu in 0..4 {
                        lhs += &(&t.sigma_bar(dn(mu), ad, a) * &t.sigma(up(mu), b, bd));
                    }
                    let rhs = &(&s(-2) * &delta(ad, bd)) * &delta(a, b);
                    r.check("sigsig-outer", &[sp(ad), sp(a), sp(b), sp(bd)], &lhs, &rhs);
                }
            }
        }
    }
    let mut bar_sigma = Mat2::default();
    let mut sigma_bar = Mat2::default();
    for mu in 0..4 {
        let bs = mat_mul(&sigma_bar_mat(t, dn(mu)), &sigma_mat(t, up(mu)));
        let sb = mat_mul(&sigma_mat(t, up(mu)), &sigma_bar_mat(t, dn(mu)));
        for x in 0..2 {
            for y in 0..2 {
                bar_sigma[x][y] += &bs[x][y];
                sigma_bar[x][y] += &sb[x][y];
            }
        }
    }
    for x in 0..2 {
        for y in 0..2 {
            let rhs = &s(-4) * &delta(x, y);
            r.check("sigsig-dotted-trace", &[sp(x), sp(y)], &bar_sigma[x][y], &rhs);
            r.check("sigsig-undotted-trace", &[sp(x), sp(y)], &sigma_bar[x][y], &rhs);
        }
    }

    for mu in 0..4u8 {
        for nu in 0..4u8 {
            let eta = t.metric(dn(mu), dn(nu));
            let und = mat_mul(&sigma_mat(t, dn(mu)), &sigma_bar_mat(t, dn(nu)));
            let und2 = mat_mul(&sigma_mat(t, dn(nu)), &sigma_bar_mat(t, dn(mu)));
            let dot = mat_mul(&sigma_bar_mat(t, dn(mu)), &sigma_mat(t, dn(nu)));
            let dot2 = mat_mul(&sigma_bar_mat(t, dn(nu)), &sigma_mat(t, dn(mu)));
            for x in 0..2 {
                for y in 0..2 {
                    let rhs = &(&s(-2) * &eta) * &delta(x, y);
                    let idx = [mu, nu, sp(x), sp(y)];
                    r.check("sigcliff-undotted", &idx, &(&und[x][y] + &und2[x][y]), &rhs);
                    r.check("sigcliff-dotted", &idx, &(&dot[x][y] + &dot2[x][y]), &rhs);
                }
            }
            r.check("tracesig2", &[mu, nu], &trace(&und), &(&s(-2) * &eta));
        }
    }

    for l in 0..4u8 {
        for mu in 0..4u8 {
            for nu in 0..4u8 {
                let lhs = mat_mul(
                    &mat_mul(&sigma_mat(t, up(l)), &sigma_bar_mat(t, up(mu))),
                    &sigma_mat(t, up(nu)),
                );
                for a in 0..2 {
                    for ad in 0..2 {
                        let mut rhs = &(&t.metric(up(l), up(nu)) * &t.sigma(up(mu), a, ad))
                            - &(&t.metric(up(l), up(mu)) * &t.sigma(up(nu), a, ad));
                        rhs -= &(&t.metric(up(mu), up(nu)) * &t.sigma(up(l), a, ad));
                        let mut eps_term = Scalar::zero();
                        for rho in 0..4u8 {
                            eps_term += &(&t.levi_civita([up(l), up(mu), up(nu), up(rho)]) * &t.sigma(dn(rho), a, ad));
                        }
                        rhs -= &(&(&i * &t.eps4.scalar()) * &eps_term);
                        r.check("sig3", &[l, mu, nu, sp(a), sp(ad)], &lhs[a][ad], &rhs);
                    }
                }
            }
        }
    }
    r
}

/// Trace identities of the spinor generators, the Pauli-matrix intertwiner
/// and the infinitesimal invariance of ε.
pub fn verify_lorentz_identities(gen: &LorentzGenerators) -> ViolationReport {
    let t = &gen.tables;
    let mut r = ViolationReport::default();
    let i = Scalar::i();
    let half = Scalar::frac(1, 2);
    let quarter = Scalar::frac(1, 4);

    for mu in 0..4u8 {
        for nu in 0..4u8 {
            let (m, n) = (mu as usize, nu as usize);
            for x in 0..2 {
                for y in 0..2 {
                    let idx = [mu, nu, sp(x), sp(y)];
                    r.check("generator-antisymmetry", &idx, &gen.s[m][n][x][y], &-&gen.s[n][m][x][y]);
                    r.check("generator-antisymmetry-dotted", &idx, &gen.s_bar[m][n][x][y], &-&gen.s_bar[n][m][x][y]);
                }
            }
            for rho in 0..4u8 {
                for sg in 0..4u8 {
                    let (p, q) = (rho as usize, sg as usize);
                    let metric_part = &(&t.metric(dn(mu), dn(rho)) * &t.metric(dn(nu), dn(sg)))
                        - &(&t.metric(dn(mu), dn(sg)) * &t.metric(dn(nu), dn(rho)));
                    let eps_part =
                        &(&i * &t.eps4.scalar()) * &t.levi_civita([dn(mu), dn(nu), dn(rho), dn(sg)]);
                    let idx = [mu, nu, rho, sg];
                    r.check(
                        "TrSS1",
                        &idx,
                        &trace(&mat_mul(&gen.s[m][n], &gen.s[p][q])),
                        &(&half * &(&metric_part - &eps_part)),
                    );
                    r.check(
                        "TrSS2",
                        &idx,
                        &trace(&mat_mul(&gen.s_bar[m][n], &gen.s_bar[p][q])),
                        &(&half * &(&metric_part + &eps_part)),
                    );
                }
            }
        }
    }

    // (L_{μν})_ρ^σ = η_{μρ} η_ν^σ − η_μ^σ η_{νρ}
    let l_lower = |mu: u8, nu: u8, rho: u8, sg: u8| -> Scalar {
        &(&t.metric(dn(mu), dn(rho)) * &t.metric(dn(nu), up(sg)))
            - &(&t.metric(dn(mu), up(sg)) * &t.metric(dn(nu), dn(rho)))
    };
    for mu in 0..4u8 {
        for nu in 0..4u8 {
            let a_mat = sigma_commutator(t, mu, nu);
            let b_mat = sigma_bar_commutator(t, mu, nu);
            for lam in 0..4u8 {
                for a in 0..2 {
                    for ad in 0..2 {
                        let mut lhs = Scalar::zero();
                        for kappa in 0..4u8 {
                            // (L_{μν})^λ_κ = η^{λρ} (L_{μν})_ρ^σ η_{σκ}
                            let mut l_mixed = Scalar::zero();
                            for rho in 0..4u8 {
                                for sg in 0..4u8 {
                                    l_mixed += &(&(&t.metric(up(lam), up(rho)) * &l_lower(mu, nu, rho, sg))
                                        * &t.metric(dn(sg), dn(kappa)));
                                }
                            }
                            lhs += &(&l_mixed * &t.sigma(up(kappa), a, ad));
                        }
                        let middle = &(&t.metric(dn(mu), up(lam)) * &t.sigma(dn(nu), a, ad))
                            - &(&t.metric(dn(nu), up(lam)) * &t.sigma(dn(mu), a, ad));
                        let mut right = Scalar::zero();
                        for b in 0..2 {
                            right += &(&(&quarter * &a_mat[a][b]) * &t.sigma(up(lam), b, ad));
                            right -= &(&(&t.sigma(up(lam), a, b) * &quarter) * &b_mat[b][ad]);
                        }
                        let idx = [mu, nu, lam, sp(a), sp(ad)];
                        r.check("invsig-vector", &idx, &lhs, &middle);
                        r.check("invsig-spinor", &idx, &middle, &right);
                    }
                }
            }
            for al in 0..2 {
                for be in 0..2 {
                    let mut lhs = Scalar::zero();
                    for g in 0..2 {
                        lhs += &(&t.eps_upper[g][be] * &a_mat[g][al]);
                        lhs += &(&t.eps_upper[al][g] * &a_mat[g][be]);
                    }
                    r.check("sl2c-invariance", &[mu, nu, sp(al), sp(be)], &lhs, &Scalar::zero());
                }
            }
        }
    }
    r
}

fn field_strength(nu: u8, lam: u8) -> Expression {
    use std::cmp::Ordering::*;
    match nu.cmp(&lam) {
        Less => Expression::atom(FieldAtom::new(Symbol::FieldStrength, Slot::Tensor(nu, lam))),
        Greater => -Expression::atom(FieldAtom::new(Symbol::FieldStrength, Slot::Tensor(lam, nu))),
        Equal => Expression::zero(),
    }
}

/// Rewriting of (i/2) ζσ^λσ̄_μσ^νζ̄ F_{νλ} through the Levi-Civita symbol,
/// with F̃_{μρ} = ½ ε_{μρ}^{νλ} F_{νλ}, for one sign convention.
pub fn dual_field_strength_identity_check_with(eps4: Eps4) -> ViolationReport {
    let t = PauliTables::new(eps4);
    let z = Spinor::zeta();
    let zb = Spinor::zeta_bar();
    let half = Scalar::frac(1, 2);
    let mut r = ViolationReport::default();
    for mu in 0..4u8 {
        let mut lhs = Expression::zero();
        let mut middle = Expression::zero();
        let mut rhs = Expression::zero();
        for lam in 0..4u8 {
            for nu in 0..4u8 {
                let f = field_strength(nu, lam);
                let chain = z.times_sigma(up(lam)).times_sigma_bar(dn(mu)).sigma_dot(up(nu), &zb);
                lhs.add_assign_ref(&chain.mul(&f).scale(&Scalar::imag(1, 2)));
                for rho in 0..4u8 {
                    let eps = t.levi_civita([up(lam), dn(mu), up(nu), dn(rho)]);
                    if eps.is_zero() {
                        continue;
                    }
                    let c = &(&half * &eps4.scalar()) * &eps;
                    middle.add_assign_ref(&z.sigma_dot(up(rho), &zb).mul(&f).scale(&c));
                }
            }
        }
        for rho in 0..4u8 {
            let mut dual = Expression::zero();
            for nu in 0..4u8 {
                for lam in 0..4u8 {
                    let eps = t.levi_civita([dn(mu), dn(rho), up(nu), up(lam)]);
                    dual.add_assign_ref(&field_strength(nu, lam).scale(&(&half * &eps)));
                }
            }
            rhs.add_assign_ref(&dual.mul(&z.sigma_dot(up(rho), &zb)).scale(&eps4.scalar()));
        }
        r.check("dual-levi-civita", &[mu], &lhs, &middle);
        r.check("dual-field-strength", &[mu], &middle, &rhs);
    }
    r
}

/// [`dual_field_strength_identity_check_with`] under both sign conventions.
pub fn dual_field_strength_identity_check() -> ViolationReport {
    let mut r = ViolationReport::default();
    for eps4 in Eps4::BOTH {
        r.merge(dual_field_strength_identity_check_with(eps4));
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trace_of_sigma0_pair() {
        let t = PauliTables::standard();
        let m = mat_mul(&sigma_mat(t, dn(0)), &sigma_bar_mat(t, dn(0)));
        assert_eq!(trace(&m), s(2));
    }

    #[test]
    fn pauli_report_is_clean_for_both_signs() {
        for eps4 in Eps4::BOTH {
            let r = verify_pauli_identities(&PauliTables::new(eps4));
            assert!(r.is_clean(), "{:?}", r.violations);
            assert_eq!(r.evaluated["sig3"], 4 * 4 * 4 * 4);
        }
    }

    #[test]
    fn lorentz_report_is_clean_for_both_signs() {
        for eps4 in Eps4::BOTH {
            let g = LorentzGenerators::from_tables(&PauliTables::new(eps4));
            let r = verify_lorentz_identities(&g);
            assert!(r.is_clean(), "{:?}", r.violations);
            assert_eq!(r.evaluated["TrSS1"], 256);
        }
    }

    #[test]
    fn trss_example() {
        let g = LorentzGenerators::from_tables(PauliTables::standard());
        assert_eq!(trace(&mat_mul(&g.s[0][1], &g.s[0][1])), Scalar::frac(-1, 2));
    }

    #[test]
    fn broken_table_is_reported() {
        let mut t = PauliTables::new(Eps4::Plus);
        t.sigma[2][0][1] = Scalar::i();
        let r = verify_pauli_identities(&t);
        assert!(!r.is_clean());
        assert!(r.violations.iter().any(|v| v.identity_name == "hermiticity"));
    }

    #[test]
    fn dual_identity_holds() {
        let r = dual_field_strength_identity_check();
        assert!(r.is_clean(), "{:?}", r.violations);
        assert_eq!(r.evaluated["dual-field-strength"], 8);
    }
}
