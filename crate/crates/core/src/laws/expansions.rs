//! Closed forms of the coordinate shift x → x − i(ζσθ̄ − θσζ̄) applied to
//! single blocks of a superfield, with θ and θ̄ held fixed.

use crate::grassmann::{Expression, Symbol};
use crate::scalar::Scalar;
use crate::spinor::{dn, up, Spinor};
use crate::superspace::fields::{dalembertian, dalembertian_spinor, derive, scalar, spinor};

struct Bilinears {
    th: Spinor,
    thb: Spinor,
    z: Spinor,
    zb: Spinor,
    th2: Expression,
    thb2: Expression,
    z2: Expression,
    zb2: Expression,
}

impl Bilinears {
    fn new() -> Self {
        let (th, thb, z, zb) = (Spinor::theta(), Spinor::theta_bar(), Spinor::zeta(), Spinor::zeta_bar());
        let (th2, thb2, z2, zb2) = (th.square(), thb.square(), z.square(), zb.square());
        Bilinears { th, thb, z, zb, th2, thb2, z2, zb2 }
    }
}

fn sum1(f: impl Fn(u8) -> Expression) -> Expression {
    (0..4u8).map(f).sum()
}

fn sum2(f: impl Fn(u8, u8) -> Expression) -> Expression {
    (0..4u8).flat_map(|a| (0..4u8).map(move |b| (a, b))).map(|(a, b)| f(a, b)).sum()
}

/// φ(x − Δ) for the scalar φ.
pub fn shifted_scalar() -> Expression {
    let b = Bilinears::new();
    let phi = scalar(Symbol::Phi, &[]);
    let box_phi = dalembertian(&phi);
    let delta = |mu: u8| b.z.sigma_dot(up(mu), &b.thb) - b.th.sigma_dot(up(mu), &b.zb);
    let mut out = phi.clone();

    // −i(ζσ^μθ̄ − θσ^μζ̄)∂_μφ
    out.add_scaled(&sum1(|mu| delta(mu).mul(&derive(&phi, &[mu]))), &Scalar::imag(-1, 1));

    // ¼(ζ²θ̄² + θ²ζ̄² + 2ζσ_μζ̄ θσ^μθ̄)∂²φ
    let mut quad = b.z2.mul(&b.thb2) + b.th2.mul(&b.zb2);
    quad.add_scaled(
        &sum1(|mu| b.z.sigma_dot(dn(mu), &b.zb).mul(&b.th.sigma_dot(up(mu), &b.thb))),
        &Scalar::int(2),
    );
    out.add_scaled(&quad.mul(&box_phi), &Scalar::frac(1, 4));

    // −½(ζσ^νζ̄ θσ^μθ̄ + ζσ^μζ̄ θσ^νθ̄)∂_μ∂_νφ
    let mixed = sum2(|mu, nu| {
        let sym = b.z.sigma_dot(up(nu), &b.zb).mul(&b.th.sigma_dot(up(mu), &b.thb))
            + b.z.sigma_dot(up(mu), &b.zb).mul(&b.th.sigma_dot(up(nu), &b.thb));
        sym.mul(&derive(&phi, &[mu, nu]))
    });
    out.add_scaled(&mixed, &Scalar::frac(-1, 2));

    // −(i/4)θ²ζ̄² ζσ^μθ̄ ∂_μ∂²φ
    let t = sum1(|mu| b.th2.mul(&b.zb2).mul(&b.z.sigma_dot(up(mu), &b.thb)).mul(&derive(&box_phi, &[mu])));
    out.add_scaled(&t, &Scalar::imag(-1, 4));

    // +(i/4)ζ²θ̄² θσ^μζ̄ ∂_μ∂²φ
    let t = sum1(|mu| b.z2.mul(&b.thb2).mul(&b.th.sigma_dot(up(mu), &b.zb)).mul(&derive(&box_phi, &[mu])));
    out.add_scaled(&t, &Scalar::imag(1, 4));

    // +(1/16)θ²θ̄²ζ²ζ̄² ∂²∂²φ
    let t = b.th2.mul(&b.thb2).mul(&b.z2).mul(&b.zb2).mul(&dalembertian(&box_phi));
    out.add_scaled(&t, &Scalar::frac(1, 16));
    out
}

/// θ·ψ(x − Δ).
pub fn shifted_theta_psi() -> Expression {
    let b = Bilinears::new();
    let psi = |d: &[u8]| spinor(Symbol::Psi, d);
    let box_psi = |d: &[u8]| dalembertian_spinor(&spinor(Symbol::Psi, d));
    let mut out = b.th.dot(&psi(&[]));

    // −(i/2)θσ^μθ̄ ζσ^νσ̄_μ ∂_νψ
    let t = sum2(|mu, nu| {
        b.th.sigma_dot(up(mu), &b.thb).mul(&b.z.times_sigma(up(nu)).times_sigma_bar(dn(mu)).dot(&psi(&[nu])))
    });
    out.add_scaled(&t, &Scalar::imag(-1, 2));

    // +(i/2)θ² ζ̄σ̄^μ∂_μψ
    let t = sum1(|mu| b.th2.mul(&b.zb.sigma_bar_dot(up(mu), &psi(&[mu]))));
    out.add_scaled(&t, &Scalar::imag(1, 2));

    // +¼ζ²θ̄² θ^α∂²ψ_α
    out.add_scaled(&b.z2.mul(&b.thb2).mul(&b.th.dot(&box_psi(&[]))), &Scalar::frac(1, 4));

    // +¼θ² ζσ_μζ̄ θ̄σ̄^μ∂²ψ
    let t = sum1(|mu| {
        b.th2.mul(&b.z.sigma_dot(dn(mu), &b.zb)).mul(&b.thb.sigma_bar_dot(up(mu), &box_psi(&[])))
    });
    out.add_scaled(&t, &Scalar::frac(1, 4));

    // −¼θ²(ζσ^μζ̄ θ̄σ̄^ν + ζσ^νζ̄ θ̄σ̄^μ)∂_μ∂_νψ
    let t = sum2(|mu, nu| {
        let d = psi(&[mu, nu]);
        let sym = b.z.sigma_dot(up(mu), &b.zb).mul(&b.thb.sigma_bar_dot(up(nu), &d))
            + b.z.sigma_dot(up(nu), &b.zb).mul(&b.thb.sigma_bar_dot(up(mu), &d));
        b.th2.mul(&sym)
    });
    out.add_scaled(&t, &Scalar::frac(-1, 4));

    // −(i/8)θ²θ̄²ζ² ∂_μ∂²ψ σ^μ ζ̄
    let t = sum1(|mu| b.th2.mul(&b.thb2).mul(&b.z2).mul(&box_psi(&[mu]).sigma_dot(up(mu), &b.zb)));
    out.add_scaled(&t, &Scalar::imag(-1, 8));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn leading_terms() {
        let phi = scalar(Symbol::Phi, &[]);
        let e = shifted_scalar();
        assert_eq!(e.retain(|k| k.word_len() == 0), phi);
        let tp = shifted_theta_psi();
        assert_eq!(tp.retain(|k| k.fields.odd()[0].derivs().is_empty()), Spinor::theta().dot(&spinor(Symbol::Psi, &[])));
    }
}
