//! Bilinear identities for products of anticommuting spinors, checked over
//! every free index value.

use crate::grassmann::{Expression, GenKind};
use crate::scalar::Scalar;
use crate::spinor::{dn, up, PauliTables, Spinor, ViolationReport};

fn aux(name: &'static str, dotted: bool) -> Spinor {
    Spinor::generators(GenKind::Aux { name, dotted })
}

fn kron(a: usize, b: usize) -> Scalar {
    if a == b {
        Scalar::one()
    } else {
        Scalar::zero()
    }
}

pub fn appendix_identities() -> ViolationReport {
    let t = PauliTables::standard();
    let mut r = ViolationReport::default();
    let th = Spinor::theta();
    let thb = Spinor::theta_bar();
    let th_lo = th.lower();
    let thb_lo = thb.lower();
    let th2 = th.square();
    let thb2 = thb.square();
    let eps = |a: usize, b: usize| t.eps_upper[a][b].clone();

    for a in 0..2 {
        for b in 0..2 {
            let idx = [a as u8 + 1, b as u8 + 1];
            let lhs = th.comps[a].mul(&th.comps[b]);
            let mid = th.comps[0].mul(&th.comps[1]).scale(&eps(a, b));
            let split = (-th.comps[0].mul(&th_lo.comps[0]) + th_lo.comps[1].mul(&th.comps[1]))
                .scale(&(&eps(a, b) * &Scalar::frac(1, 2)));
            let contracted: Expression = (0..2).map(|g| th.comps[g].mul(&th_lo.comps[g])).sum();
            r.check("TT1/components", &idx, &lhs, &mid);
            r.check("TT1/split", &idx, &lhs, &split);
            r.check("TT1/contracted", &idx, &lhs, &contracted.scale(&(&eps(a, b) * &Scalar::frac(-1, 2))));
            r.check("TT1/square", &idx, &lhs, &th2.scale(&(&eps(a, b) * &Scalar::frac(-1, 2))));

            let lhs = thb.comps[a].mul(&thb.comps[b]);
            r.check("TT2/components", &idx, &lhs, &thb.comps[0].mul(&thb.comps[1]).scale(&eps(a, b)));
            r.check("TT2/square", &idx, &lhs, &thb2.scale(&(&eps(a, b) * &Scalar::frac(1, 2))));

            let lhs = th_lo.comps[a].mul(&th.comps[b]);
            r.check("TT3/undotted-flip", &idx, &lhs, &-th.comps[b].mul(&th_lo.comps[a]));
            r.check("TT3/undotted", &idx, &lhs, &th2.scale(&(&kron(a, b) * &Scalar::frac(-1, 2))));
            let lhs = thb_lo.comps[a].mul(&thb.comps[b]);
            r.check("TT3/dotted-flip", &idx, &lhs, &-thb.comps[b].mul(&thb_lo.comps[a]));
            r.check("TT3/dotted", &idx, &lhs, &thb2.scale(&(&kron(a, b) * &Scalar::frac(1, 2))));
        }
    }

    let psi = aux("psi", false);
    let chi = aux("chi", false);
    let chib = aux("chi", true);
    let psi_lo = psi.lower();
    let chib_lo = chib.lower();
    let z = aux("zeta", false);
    for mu in 0..4u8 {
        let lhs = psi.sigma_dot(up(mu), &chib);
        let mut expanded = Expression::zero();
        for (al, be, ad, bd) in quad() {
            let k = &(&eps(al, be) * &eps(ad, bd)) * &t.sigma(up(mu), al, ad);
            expanded.add_scaled(&psi_lo.comps[be].mul(&chib_lo.comps[bd]), &k);
        }
        r.check("prop1/expanded", &[mu], &lhs, &expanded);
        r.check("prop1/flip", &[mu], &lhs, &-chib.sigma_bar_dot(up(mu), &psi));

        for nu in 0..4u8 {
            let lhs = psi.times_sigma(up(mu)).times_sigma_bar(up(nu)).dot(&chi);
            let rhs = chi.times_sigma(up(nu)).times_sigma_bar(up(mu)).dot(&psi);
            r.check("prop2", &[mu, nu], &lhs, &rhs);

            let lhs = z.sigma_dot(up(mu), &thb).mul(&z.sigma_dot(up(nu), &thb));
            let mut expanded = Expression::zero();
            for (al, be, ad, bd) in quad() {
                let k = &(&eps(al, be) * &eps(ad, bd)) * &(&t.sigma(up(mu), al, ad) * &t.sigma(up(nu), be, bd));
                expanded.add_scaled(&z.square().mul(&thb2), &(&k * &Scalar::frac(1, 4)));
            }
            let eta = t.metric(up(mu), up(nu));
            r.check("ident3/expanded", &[mu, nu], &lhs, &expanded);
            r.check("ident3", &[mu, nu], &lhs, &z.square().mul(&thb2).scale(&(&eta * &Scalar::frac(-1, 2))));
        }
    }

    for ad in 0..2 {
        for al in 0..2 {
            let idx = [ad as u8 + 1, al as u8 + 1];
            let lhs = thb.comps[ad].mul(&psi.comps[al]);
            let mut fierz = Expression::zero();
            let mut bilinear = Expression::zero();
            for lam in 0..4u8 {
                let sb = t.sigma_bar(dn(lam), ad, al);
                if sb.is_zero() {
                    continue;
                }
                for g in 0..2 {
                    for gd in 0..2 {
                        let k = &sb * &t.sigma(up(lam), g, gd);
                        fierz.add_scaled(&thb.comps[gd].mul(&psi.comps[g]), &(&k * &Scalar::frac(-1, 2)));
                    }
                }
                bilinear.add_scaled(&psi.sigma_dot(up(lam), &thb), &(&sb * &Scalar::frac(1, 2)));
            }
            r.check("prop3/fierz", &idx, &lhs, &fierz);
            r.check("prop3", &idx, &lhs, &bilinear);
        }
    }
    r
}

fn quad() -> impl Iterator<Item = (usize, usize, usize, usize)> {
    (0..16).map(|n| (n & 1, (n >> 1) & 1, (n >> 2) & 1, (n >> 3) & 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_identities_hold() {
        let r = appendix_identities();
        assert!(r.is_clean(), "{:#?}", r.violations);
        assert!(r.total_evaluated() > 100);
    }
}
