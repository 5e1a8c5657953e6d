//! The super-Poincaré algebra and the covariant-derivative algebra as
//! operator identities on probe superfields.

use std::time::Instant;

use crate::grassmann::{spacetime_derive, Expression};
use crate::random::{random_expression, rng, Shape};
use crate::scalar::Scalar;
use crate::spinor::{dn, up, PauliTables};
use crate::superspace::{
    anticommutator, apply_operator, build_chiral_superfield, build_general_superfield, commutator,
    sigma_bar_commutator, sigma_commutator, SuperOperator,
};

use super::report::VerificationReport;

use SuperOperator::{DBar, P, Q, QBar, D, M};

/// Probe superfields: the general and chiral superfields and `random`
/// seeded random superfields with coordinate factors.
pub fn probes(seed: u64, random: usize) -> Vec<(String, Expression)> {
    let mut out = vec![
        ("general".to_string(), build_general_superfield().expr),
        ("chiral".to_string(), build_chiral_superfield().expr),
    ];
    let mut r = rng(seed);
    let shape = Shape::superfield();
    for k in 0..random {
        out.push((format!("random-{k}"), random_expression(&mut r, &shape)));
    }
    out
}

fn eta(mu: u8, nu: u8) -> Scalar {
    PauliTables::standard().metric(dn(mu), dn(nu))
}

/// p_μ = −i∂_μ applied to `e`.
fn momentum(mu: u8, e: &Expression) -> Expression {
    apply_operator(P(mu), e)
}

struct Bracket {
    name: String,
    lhs: Box<dyn Fn(&Expression) -> Expression>,
    rhs: Box<dyn Fn(&Expression) -> Expression>,
}

fn bracket(
    name: impl Into<String>,
    lhs: impl Fn(&Expression) -> Expression + 'static,
    rhs: impl Fn(&Expression) -> Expression + 'static,
) -> Bracket {
    Bracket { name: name.into(), lhs: Box::new(lhs), rhs: Box::new(rhs) }
}

fn zero(_: &Expression) -> Expression {
    Expression::zero()
}

fn brackets() -> Vec<Bracket> {
    let mut out = Vec::new();
    let t = PauliTables::standard();
    for a in 0..2u8 {
        for ad in 0..2u8 {
            let s: Vec<Scalar> = (0..4u8).map(|mu| t.sigma(up(mu), a as usize, ad as usize)).collect();
            let s2 = s.clone();
            out.push(bracket(
                format!("{{Q_{},Qb_{}}} = 2 sigma p", a + 1, ad + 1),
                move |e| anticommutator(Q(a), QBar(ad), e),
                move |e| (0..4u8).map(|mu| momentum(mu, e).scale(&(&s[mu as usize] * &Scalar::int(2)))).sum(),
            ));
            out.push(bracket(
                format!("{{D_{},Db_{}}} = 2i sigma d", a + 1, ad + 1),
                move |e| anticommutator(D(a), DBar(ad), e),
                move |e| {
                    (0..4u8).map(|mu| spacetime_derive(e, mu).scale(&(&s2[mu as usize] * &Scalar::imag(2, 1)))).sum()
                },
            ));
        }
        for b in 0..2u8 {
            let pairs = [
                ("Q", Q(a), "Q", Q(b)),
                ("Qb", QBar(a), "Qb", QBar(b)),
                ("D", D(a), "D", D(b)),
                ("Db", DBar(a), "Db", DBar(b)),
                ("Q", Q(a), "D", D(b)),
                ("Q", Q(a), "Db", DBar(b)),
                ("Qb", QBar(a), "D", D(b)),
                ("Qb", QBar(a), "Db", DBar(b)),
            ];
            for (n1, o1, n2, o2) in pairs {
                out.push(bracket(
                    format!("{{{n1}_{},{n2}_{}}} = 0", a + 1, b + 1),
                    move |e| anticommutator(o1, o2, e),
                    zero,
                ));
            }
        }
        for mu in 0..4u8 {
            out.push(bracket(format!("[p_{mu},Q_{}] = 0", a + 1), move |e| commutator(P(mu), Q(a), e), zero));
            out.push(bracket(format!("[p_{mu},Qb_{}] = 0", a + 1), move |e| commutator(P(mu), QBar(a), e), zero));
        }
    }

    for mu in 0..4u8 {
        for nu in 0..4u8 {
            if mu == nu {
                continue;
            }
            let sc = sigma_commutator(mu, nu);
            let sbc = sigma_bar_commutator(mu, nu);
            for a in 0..2u8 {
                let sc = sc.clone();
                out.push(bracket(
                    format!("[M_{mu}{nu},Q_{}] = -i/4 (s s - s s) Q", a + 1),
                    move |e| commutator(M(mu, nu), Q(a), e),
                    move |e| {
                        (0..2u8)
                            .map(|b| apply_operator(Q(b), e).scale(&(&sc[a as usize][b as usize] * &Scalar::imag(-1, 4))))
                            .sum()
                    },
                ));
                let sbc = sbc.clone();
                out.push(bracket(
                    format!("[M_{mu}{nu},Qb_{}] = i/4 Qb (sb s - sb s)", a + 1),
                    move |e| commutator(M(mu, nu), QBar(a), e),
                    move |e| {
                        (0..2u8)
                            .map(|b| {
                                apply_operator(QBar(b), e).scale(&(&sbc[b as usize][a as usize] * &Scalar::imag(1, 4)))
                            })
                            .sum()
                    },
                ));
            }
            for rho in 0..4u8 {
                out.push(bracket(
                    format!("[M_{mu}{nu},p_{rho}] = i L p"),
                    move |e| commutator(M(mu, nu), P(rho), e),
                    move |e| {
                        let mut acc = momentum(nu, e).scale(&eta(mu, rho));
                        acc.add_scaled(&momentum(mu, e), &-eta(nu, rho));
                        acc.scale(&Scalar::i())
                    },
                ));
            }
        }
    }
    out
}

fn lorentz_brackets() -> Vec<Bracket> {
    let mut out = Vec::new();
    let m = |mu: u8, nu: u8, e: &Expression| -> Expression {
        if mu == nu {
            Expression::zero()
        } else {
            apply_operator(M(mu, nu), e)
        }
    };
    for mu in 0..4u8 {
        for nu in (mu + 1)..4u8 {
            for rho in 0..4u8 {
                for sg in (rho + 1)..4u8 {
                    out.push(bracket(
                        format!("[M_{mu}{nu},M_{rho}{sg}] = i L M + i L M"),
                        move |e| commutator(M(mu, nu), M(rho, sg), e),
                        move |e| {
                            let mut acc = m(nu, sg, e).scale(&eta(mu, rho));
                            acc.add_scaled(&m(mu, sg, e), &-eta(nu, rho));
                            acc.add_scaled(&m(rho, nu, e), &eta(mu, sg));
                            acc.add_scaled(&m(rho, mu, e), &-eta(nu, sg));
                            acc.scale(&Scalar::i())
                        },
                    ));
                }
            }
        }
    }
    out
}

/// Every bracket of the algebra evaluated on every probe; one check per
/// bracket, listing the probes on which it fails.
pub fn verify_algebra(seed: u64, random_probes: usize) -> VerificationReport {
    let mut report = VerificationReport::default();
    let probes = probes(seed, random_probes);
    for b in brackets().into_iter().chain(lorentz_brackets()) {
        let started = Instant::now();
        let entries: Vec<_> = probes.iter().map(|(name, e)| (name.clone(), (b.lhs)(e), (b.rhs)(e))).collect();
        report.push_entries(format!("algebra/{}", b.name), started, &entries);
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bracket_count() {
        assert!(brackets().len() > 100);
    }
}
