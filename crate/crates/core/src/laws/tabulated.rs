//! Component transformation laws of the general and chiral multiplets under
//! a finite supertranslation, written out term by term.
//!
//! Each function takes the (possibly substituted) component fields and
//! returns the transformed component. Derivatives act on the supplied field
//! expressions, so substituting e.g. A_μ → i∂_μφ propagates into ∂_νA_μ.
//! Nothing here calls the supertranslation engine.

use crate::grassmann::Expression;
use crate::scalar::Scalar;
use crate::spinor::{dn, up, Chirality, Position, Spinor, VIdx};
use crate::superspace::fields::{dalembertian, dalembertian_spinor, derive};
use crate::superspace::{ChiralComponents, Component, Components};

fn c(re: i64, den: i64) -> Scalar {
    Scalar::frac(re, den)
}

fn ci(im: i64, den: i64) -> Scalar {
    Scalar::imag(im, den)
}

/// ζ, ζ̄ and the bilinears built from them.
struct Params {
    z: Spinor,
    zb: Spinor,
    z2: Expression,
    zb2: Expression,
    z2zb2: Expression,
}

impl Params {
    fn new() -> Self {
        let z = Spinor::zeta();
        let zb = Spinor::zeta_bar();
        let z2 = z.square();
        let zb2 = zb.square();
        let z2zb2 = z2.mul(&zb2);
        Params { z, zb, z2, zb2, z2zb2 }
    }

    /// ζσ^μζ̄
    fn zsz(&self, mu: VIdx) -> Expression {
        self.z.sigma_dot(mu, &self.zb)
    }
}

/// Field accessors with derivatives applied.
struct F<'a>(&'a Components);

impl F<'_> {
    fn phi(&self, d: &[u8]) -> Expression {
        derive(&self.0.phi, d)
    }
    fn m(&self, d: &[u8]) -> Expression {
        derive(&self.0.m, d)
    }
    fn n(&self, d: &[u8]) -> Expression {
        derive(&self.0.n, d)
    }
    fn dd(&self, d: &[u8]) -> Expression {
        derive(&self.0.d, d)
    }
    /// A_μ
    fn a(&self, mu: u8, d: &[u8]) -> Expression {
        derive(&self.0.a[mu as usize], d)
    }
    /// ∂_μ A^μ
    fn div_a(&self, d: &[u8]) -> Expression {
        (0..4u8).map(|mu| derive(&self.0.a[mu as usize], &[&[mu][..], d].concat()).scale(&eta(mu))).sum()
    }
    fn psi(&self, d: &[u8]) -> Spinor {
        spinor_derive(&self.0.psi, d)
    }
    fn chib(&self, d: &[u8]) -> Spinor {
        spinor_derive(&self.0.chi_bar, d)
    }
    fn kappa(&self, d: &[u8]) -> Spinor {
        spinor_derive(&self.0.kappa, d)
    }
    fn lamb(&self, d: &[u8]) -> Spinor {
        spinor_derive(&self.0.lambda_bar, d)
    }
}

fn eta(mu: u8) -> Scalar {
    if mu == 0 {
        Scalar::int(-1)
    } else {
        Scalar::one()
    }
}

fn spinor_derive(s: &Spinor, d: &[u8]) -> Spinor {
    d.iter().fold(s.clone(), |acc, &mu| acc.derive(mu))
}

fn box_s(s: &Spinor) -> Spinor {
    dalembertian_spinor(s)
}

/// Σ over one vector index.
fn sum1(f: impl Fn(u8) -> Expression) -> Expression {
    (0..4u8).map(f).sum()
}

/// Σ over two vector indices.
fn sum2(f: impl Fn(u8, u8) -> Expression) -> Expression {
    (0..4u8).flat_map(|a| (0..4u8).map(move |b| (a, b))).map(|(a, b)| f(a, b)).sum()
}

fn sum1_s(ch: Chirality, f: impl Fn(u8) -> Spinor) -> Spinor {
    (0..4u8).fold(Spinor::zero(ch, Position::Lower), |acc, mu| &acc + &f(mu))
}

fn sum2_s(ch: Chirality, f: impl Fn(u8, u8) -> Spinor) -> Spinor {
    let mut acc = Spinor::zero(ch, Position::Lower);
    for a in 0..4u8 {
        for b in 0..4u8 {
            acc = &acc + &f(a, b);
        }
    }
    acc
}

/// Accumulates spinor terms with scalar prefactors in lower position.
struct SpinorSum(Spinor);

impl SpinorSum {
    fn new(ch: Chirality) -> Self {
        SpinorSum(Spinor::zero(ch, Position::Lower))
    }

    fn add(&mut self, k: Scalar, s: Spinor) {
        self.0 = &self.0 + &s.scale(&k);
    }

    fn finish(self) -> Spinor {
        self.0.lower()
    }
}

/// Accumulates expression terms with scalar prefactors.
struct Sum(Expression);

impl Sum {
    fn new() -> Self {
        Sum(Expression::zero())
    }

    fn add(&mut self, k: Scalar, e: Expression) {
        self.0.add_scaled(&e, &k);
    }
}

/// φ′
pub fn phi_prime(fields: &Components) -> Expression {
    let p = Params::new();
    let f = F(fields);
    let mut s = Sum::new();
    // φ
    s.add(c(1, 1), f.phi(&[]));
    // + ζ·ψ
    s.add(c(1, 1), p.z.dot(&f.psi(&[])));
    // + χ̄·ζ̄
    s.add(c(1, 1), f.chib(&[]).dot(&p.zb));
    // + ζσ^μζ̄ A_μ
    s.add(c(1, 1), sum1(|mu| p.zsz(up(mu)).mul(&f.a(mu, &[]))));
    // + ζ² M
    s.add(c(1, 1), p.z2.mul(&f.m(&[])));
    // + ζ̄² N
    s.add(c(1, 1), p.zb2.mul(&f.n(&[])));
    // + ζ̄² ζ·κ
    s.add(c(1, 1), p.zb2.mul(&p.z.dot(&f.kappa(&[]))));
    // + ζ² ζ̄·λ̄
    s.add(c(1, 1), p.z2.mul(&p.zb.dot(&f.lamb(&[]))));
    // + ζ²ζ̄² D
    s.add(c(1, 1), p.z2zb2.mul(&f.dd(&[])));
    s.0
}

/// ψ′_α
pub fn psi_prime(fields: &Components) -> Spinor {
    let p = Params::new();
    let f = F(fields);
    let mut s = SpinorSum::new(Chirality::Undotted);
    // iσ^μζ̄ ∂_μφ
    s.add(ci(1, 1), sum1_s(Chirality::Undotted, |mu| Spinor::sigma_times(up(mu), &p.zb).right_mul(&f.phi(&[mu]))));
    // + ψ
    s.add(c(1, 1), f.psi(&[]));
    // + (i/2) σ^μσ̄_ν∂_μψ ζσ^νζ̄
    s.add(
        ci(1, 2),
        sum2_s(Chirality::Undotted, |mu, nu| {
            Spinor::sigma_times(up(mu), &Spinor::sigma_bar_times(dn(nu), &f.psi(&[mu]))).right_mul(&p.zsz(up(nu)))
        }),
    );
    // − (i/2) ζ̄² σ^μ∂_μχ̄
    s.add(ci(-1, 2), sum1_s(Chirality::Undotted, |mu| Spinor::sigma_times(up(mu), &f.chib(&[mu])).left_mul(&p.zb2)));
    // + σ^μζ̄ A_μ
    s.add(c(1, 1), sum1_s(Chirality::Undotted, |mu| Spinor::sigma_times(up(mu), &p.zb).right_mul(&f.a(mu, &[]))));
    // + (i/2) σ^νσ̄^μζ ζ̄² ∂_νA_μ
    s.add(
        ci(1, 2),
        sum2_s(Chirality::Undotted, |nu, mu| {
            Spinor::sigma_times(up(nu), &Spinor::sigma_bar_times(up(mu), &p.z)).right_mul(&p.zb2.mul(&f.a(mu, &[nu])))
        }),
    );
    // + 2ζ M
    s.add(c(2, 1), p.z.right_mul(&f.m(&[])));
    // + iζ² σ^μζ̄ ∂_μM
    s.add(ci(1, 1), sum1_s(Chirality::Undotted, |mu| Spinor::sigma_times(up(mu), &p.zb).left_mul(&p.z2).right_mul(&f.m(&[mu]))));
    // + κ ζ̄²
    s.add(c(1, 1), f.kappa(&[]).right_mul(&p.zb2));
    // − σ_μλ̄ ζσ^μζ̄
    s.add(c(-1, 1), sum1_s(Chirality::Undotted, |mu| Spinor::sigma_times(dn(mu), &f.lamb(&[])).right_mul(&p.zsz(up(mu)))));
    // − (i/2) ζ²ζ̄² σ^μ∂_μλ̄
    s.add(ci(-1, 2), sum1_s(Chirality::Undotted, |mu| Spinor::sigma_times(up(mu), &f.lamb(&[mu])).left_mul(&p.z2zb2)));
    // + 2ζ ζ̄² D
    s.add(c(2, 1), p.z.right_mul(&p.zb2.mul(&f.dd(&[]))));
    s.finish()
}

/// χ̄′_α̇
pub fn chi_bar_prime(fields: &Components) -> Spinor {
    let p = Params::new();
    let f = F(fields);
    let d = Chirality::Dotted;
    let mut s = SpinorSum::new(d);
    // − i∂_μφ ζσ^μ
    s.add(ci(-1, 1), sum1_s(d, |mu| p.z.times_sigma(up(mu)).left_mul(&f.phi(&[mu]))));
    // + (i/2) ζ² ∂_μψσ^μ
    s.add(ci(1, 2), sum1_s(d, |mu| f.psi(&[mu]).times_sigma(up(mu)).left_mul(&p.z2)));
    // + χ̄
    s.add(c(1, 1), f.chib(&[]));
    // − (i/2) ζσ^νζ̄ ∂_μχ̄σ̄_νσ^μ
    s.add(
        ci(-1, 2),
        sum2_s(d, |nu, mu| f.chib(&[mu]).times_sigma_bar(dn(nu)).times_sigma(up(mu)).left_mul(&p.zsz(up(nu)))),
    );
    // + A_μ ζσ^μ
    s.add(c(1, 1), sum1_s(d, |mu| p.z.times_sigma(up(mu)).left_mul(&f.a(mu, &[]))));
    // − (i/2) ζ² ∂_νA_μ ζ̄σ̄^μσ^ν
    s.add(
        ci(-1, 2),
        sum2_s(d, |nu, mu| {
            p.zb.times_sigma_bar(up(mu)).times_sigma(up(nu)).left_mul(&p.z2.mul(&f.a(mu, &[nu])))
        }),
    );
    // + 2ζ̄ N
    s.add(c(2, 1), p.zb.right_mul(&f.n(&[])));
    // − i ζ̄² ∂_μN ζσ^μ
    s.add(ci(-1, 1), sum1_s(d, |mu| p.z.times_sigma(up(mu)).left_mul(&p.zb2.mul(&f.n(&[mu])))));
    // − ζσ^μζ̄ κσ_μ
    s.add(c(-1, 1), sum1_s(d, |mu| f.kappa(&[]).times_sigma(dn(mu)).left_mul(&p.zsz(up(mu)))));
    // + (i/2) ζ²ζ̄² ∂_μκσ^μ
    s.add(ci(1, 2), sum1_s(d, |mu| f.kappa(&[mu]).times_sigma(up(mu)).left_mul(&p.z2zb2)));
    // + ζ² λ̄
    s.add(c(1, 1), f.lamb(&[]).left_mul(&p.z2));
    // + 2ζ² ζ̄ D
    s.add(c(2, 1), p.zb.left_mul(&p.z2).right_mul(&f.dd(&[])));
    s.finish()
}

/// A′_μ for lower index `mu`.
pub fn a_prime(fields: &Components, mu: u8) -> Expression {
    let p = Params::new();
    let f = F(fields);
    let box_a = |m: u8| dalembertian(&f.a(m, &[]));
    let mut s = Sum::new();
    // ½ ζσ_μζ̄ ∂²φ
    s.add(c(1, 2), p.zsz(dn(mu)).mul(&dalembertian(&f.phi(&[]))));
    // − ζσ^νζ̄ ∂_μ∂_νφ
    s.add(c(-1, 1), sum1(|nu| p.zsz(up(nu)).mul(&f.phi(&[mu, nu]))));
    // − (i/2) ζσ^νσ̄_μ∂_νψ
    s.add(ci(-1, 2), sum1(|nu| p.z.times_sigma(up(nu)).times_sigma_bar(dn(mu)).dot(&f.psi(&[nu]))));
    // − ¼ ζ² ∂²ψσ_μζ̄
    s.add(c(-1, 4), p.z2.mul(&box_s(&f.psi(&[])).sigma_dot(dn(mu), &p.zb)));
    // + ½ ζ² ∂_μ∂_νψσ^νζ̄
    s.add(c(1, 2), sum1(|nu| p.z2.mul(&f.psi(&[mu, nu]).sigma_dot(up(nu), &p.zb))));
    // + (i/2) ∂_νχ̄σ̄_μσ^νζ̄
    s.add(ci(1, 2), sum1(|nu| f.chib(&[nu]).times_sigma_bar(dn(mu)).sigma_dot(up(nu), &p.zb)));
    // − ¼ ζ̄² ζσ_μ∂²χ̄
    s.add(c(-1, 4), p.zb2.mul(&p.z.sigma_dot(dn(mu), &box_s(&f.chib(&[])))));
    // + ½ ζ̄² ζσ^ν∂_μ∂_νχ̄
    s.add(c(1, 2), sum1(|nu| p.zb2.mul(&p.z.sigma_dot(up(nu), &f.chib(&[mu, nu])))));
    // + A_μ
    s.add(c(1, 1), f.a(mu, &[]));
    // + (i/2) ζσ^λσ̄_μσ^νζ̄ (∂_νA_λ − ∂_λA_ν)
    s.add(
        ci(1, 2),
        sum2(|lam, nu| {
            let chain = p.z.times_sigma(up(lam)).times_sigma_bar(dn(mu)).sigma_dot(up(nu), &p.zb);
            chain.mul(&(f.a(lam, &[nu]) - f.a(nu, &[lam])))
        }),
    );
    // − ¼ ζ²ζ̄² (∂²A_μ − 2∂_μ∂_νA^ν)
    s.add(c(-1, 4), p.z2zb2.mul(&(box_a(mu) - f.div_a(&[mu]).scale(&c(2, 1)))));
    // + iζ² ∂_μM
    s.add(ci(1, 1), p.z2.mul(&f.m(&[mu])));
    // − iζ̄² ∂_μN
    s.add(ci(-1, 1), p.zb2.mul(&f.n(&[mu])));
    // − κσ_μζ̄
    s.add(c(-1, 1), f.kappa(&[]).sigma_dot(dn(mu), &p.zb));
    // − iζ̄² ζ·∂_μκ
    s.add(ci(-1, 1), p.zb2.mul(&p.z.dot(&f.kappa(&[mu]))));
    // − (i/2) ζ̄² ζσ^νσ̄_μ∂_νκ
    s.add(ci(-1, 2), sum1(|nu| p.zb2.mul(&p.z.times_sigma(up(nu)).times_sigma_bar(dn(mu)).dot(&f.kappa(&[nu])))));
    // − ζσ_μλ̄
    s.add(c(-1, 1), p.z.sigma_dot(dn(mu), &f.lamb(&[])));
    // + iζ² ζ̄·∂_μλ̄
    s.add(ci(1, 1), p.z2.mul(&p.zb.dot(&f.lamb(&[mu]))));
    // + (i/2) ζ² ∂_νλ̄σ̄_μσ^νζ̄
    s.add(ci(1, 2), sum1(|nu| p.z2.mul(&f.lamb(&[nu]).times_sigma_bar(dn(mu)).sigma_dot(up(nu), &p.zb))));
    // − 2ζσ_μζ̄ D
    s.add(c(-2, 1), p.zsz(dn(mu)).mul(&f.dd(&[])));
    s.0
}

/// M′
pub fn m_prime(fields: &Components) -> Expression {
    let p = Params::new();
    let f = F(fields);
    let mut s = Sum::new();
    // ¼ ζ̄² ∂²φ
    s.add(c(1, 4), p.zb2.mul(&dalembertian(&f.phi(&[]))));
    // − (i/2) ∂_μψσ^μζ̄
    s.add(ci(-1, 2), sum1(|mu| f.psi(&[mu]).sigma_dot(up(mu), &p.zb)));
    // + ¼ ζ̄² ζ·∂²ψ
    s.add(c(1, 4), p.zb2.mul(&p.z.dot(&box_s(&f.psi(&[])))));
    // − (i/2) ζ̄² ∂_μA^μ
    s.add(ci(-1, 2), p.zb2.mul(&f.div_a(&[])));
    // + M
    s.add(c(1, 1), f.m(&[]));
    // − iζσ^μζ̄ ∂_μM
    s.add(ci(-1, 1), sum1(|mu| p.zsz(up(mu)).mul(&f.m(&[mu]))));
    // + ¼ ζ²ζ̄² ∂²M
    s.add(c(1, 4), p.z2zb2.mul(&dalembertian(&f.m(&[]))));
    // + ζ̄·λ̄
    s.add(c(1, 1), p.zb.dot(&f.lamb(&[])));
    // + (i/2) ζ̄² ζσ^μ∂_μλ̄
    s.add(ci(1, 2), sum1(|mu| p.zb2.mul(&p.z.sigma_dot(up(mu), &f.lamb(&[mu])))));
    // + ζ̄² D
    s.add(c(1, 1), p.zb2.mul(&f.dd(&[])));
    s.0
}

/// N′
pub fn n_prime(fields: &Components) -> Expression {
    let p = Params::new();
    let f = F(fields);
    let mut s = Sum::new();
    // ¼ ζ² ∂²φ
    s.add(c(1, 4), p.z2.mul(&dalembertian(&f.phi(&[]))));
    // + (i/2) ζσ^μ∂_μχ̄
    s.add(ci(1, 2), sum1(|mu| p.z.sigma_dot(up(mu), &f.chib(&[mu]))));
    // + ¼ ζ² ζ̄·∂²χ̄
    s.add(c(1, 4), p.z2.mul(&p.zb.dot(&box_s(&f.chib(&[])))));
    // + (i/2) ζ² ∂_μA^μ
    s.add(ci(1, 2), p.z2.mul(&f.div_a(&[])));
    // + N
    s.add(c(1, 1), f.n(&[]));
    // + iζσ^μζ̄ ∂_μN
    s.add(ci(1, 1), sum1(|mu| p.zsz(up(mu)).mul(&f.n(&[mu]))));
    // + ¼ ζ²ζ̄² ∂²N
    s.add(c(1, 4), p.z2zb2.mul(&dalembertian(&f.n(&[]))));
    // + ζ·κ
    s.add(c(1, 1), p.z.dot(&f.kappa(&[])));
    // − (i/2) ζ² ∂_μκσ^μζ̄
    s.add(ci(-1, 2), sum1(|mu| p.z2.mul(&f.kappa(&[mu]).sigma_dot(up(mu), &p.zb))));
    // + ζ² D
    s.add(c(1, 1), p.z2.mul(&f.dd(&[])));
    s.0
}

/// κ′_α
pub fn kappa_prime(fields: &Components) -> Spinor {
    let p = Params::new();
    let f = F(fields);
    let u = Chirality::Undotted;
    let mut s = SpinorSum::new(u);
    // (i/4) ζ² σ^μζ̄ ∂_μ∂²φ
    s.add(ci(1, 4), sum1_s(u, |mu| Spinor::sigma_times(up(mu), &p.zb).left_mul(&p.z2).right_mul(&dalembertian(&f.phi(&[mu])))));
    // + ¼ ζ² ∂²ψ
    s.add(c(1, 4), box_s(&f.psi(&[])).left_mul(&p.z2));
    // − ¼ (ζσ_μζ̄) σ^μ∂²χ̄
    s.add(c(-1, 4), sum1_s(u, |mu| Spinor::sigma_times(up(mu), &box_s(&f.chib(&[]))).left_mul(&p.zsz(dn(mu)))));
    // + ½ (ζσ^μζ̄) σ^ν∂_μ∂_νχ̄
    s.add(c(1, 2), sum2_s(u, |mu, nu| Spinor::sigma_times(up(nu), &f.chib(&[mu, nu])).left_mul(&p.zsz(up(mu)))));
    // − (i/8) ζ²ζ̄² σ^μ∂_μ∂²χ̄
    s.add(ci(-1, 8), sum1_s(u, |mu| Spinor::sigma_times(up(mu), &box_s(&f.chib(&[mu]))).left_mul(&p.z2zb2)));
    // − (i/2) σ^μσ̄^νζ ∂_νA_μ
    s.add(
        ci(-1, 2),
        sum2_s(u, |mu, nu| Spinor::sigma_times(up(mu), &Spinor::sigma_bar_times(up(nu), &p.z)).right_mul(&f.a(mu, &[nu]))),
    );
    // + ¼ ζ² σ^μζ̄ ∂²A_μ
    s.add(
        c(1, 4),
        sum1_s(u, |mu| Spinor::sigma_times(up(mu), &p.zb).left_mul(&p.z2).right_mul(&dalembertian(&f.a(mu, &[])))),
    );
    // − ½ ζ² σ^μζ̄ ∂_μ∂_νA^ν
    s.add(c(-1, 2), sum1_s(u, |mu| Spinor::sigma_times(up(mu), &p.zb).left_mul(&p.z2).right_mul(&f.div_a(&[mu]))));
    // + iσ^μζ̄ ∂_μN
    s.add(ci(1, 1), sum1_s(u, |mu| Spinor::sigma_times(up(mu), &p.zb).right_mul(&f.n(&[mu]))));
    // + ½ ζ ζ̄² ∂²N
    s.add(c(1, 2), p.z.right_mul(&p.zb2.mul(&dalembertian(&f.n(&[])))));
    // + κ
    s.add(c(1, 1), f.kappa(&[]));
    // + (i/2) (ζσ^νζ̄) σ^μσ̄_ν∂_μκ
    s.add(
        ci(1, 2),
        sum2_s(u, |nu, mu| {
            Spinor::sigma_times(up(mu), &Spinor::sigma_bar_times(dn(nu), &f.kappa(&[mu]))).left_mul(&p.zsz(up(nu)))
        }),
    );
    // + i (ζσ^μζ̄) ∂_μκ
    s.add(ci(1, 1), sum1_s(u, |mu| f.kappa(&[mu]).left_mul(&p.zsz(up(mu)))));
    // − (i/2) ζ² σ^μ∂_μλ̄
    s.add(ci(-1, 2), sum1_s(u, |mu| Spinor::sigma_times(up(mu), &f.lamb(&[mu])).left_mul(&p.z2)));
    // + 2ζ D
    s.add(c(2, 1), p.z.right_mul(&f.dd(&[])));
    s.finish()
}

/// λ̄′_α̇
pub fn lambda_bar_prime(fields: &Components) -> Spinor {
    let p = Params::new();
    let f = F(fields);
    let d = Chirality::Dotted;
    let mut s = SpinorSum::new(d);
    // − (i/4) ζ̄² ∂_μ∂²φ ζσ^μ
    s.add(ci(-1, 4), sum1_s(d, |mu| p.z.times_sigma(up(mu)).left_mul(&p.zb2.mul(&dalembertian(&f.phi(&[mu]))))));
    // − ¼ (ζσ_μζ̄) ∂²ψσ^μ
    s.add(c(-1, 4), sum1_s(d, |mu| box_s(&f.psi(&[])).times_sigma(up(mu)).left_mul(&p.zsz(dn(mu)))));
    // + ½ (ζσ^μζ̄) ∂_μ∂_νψσ^ν
    s.add(c(1, 2), sum2_s(d, |mu, nu| f.psi(&[mu, nu]).times_sigma(up(nu)).left_mul(&p.zsz(up(mu)))));
    // + (i/8) ζ²ζ̄² ∂_μ∂²ψσ^μ
    s.add(ci(1, 8), sum1_s(d, |mu| box_s(&f.psi(&[mu])).times_sigma(up(mu)).left_mul(&p.z2zb2)));
    // + ¼ ζ̄² ∂²χ̄
    s.add(c(1, 4), box_s(&f.chib(&[])).left_mul(&p.zb2));
    // + (i/2) ∂_νA_μ ζ̄σ̄^νσ^μ
    s.add(
        ci(1, 2),
        sum2_s(d, |nu, mu| p.zb.times_sigma_bar(up(nu)).times_sigma(up(mu)).left_mul(&f.a(mu, &[nu]))),
    );
    // + ¼ ζ̄² ∂²A_μ ζσ^μ
    s.add(c(1, 4), sum1_s(d, |mu| p.z.times_sigma(up(mu)).left_mul(&p.zb2.mul(&dalembertian(&f.a(mu, &[]))))));
    // − ½ ζ̄² ζσ^μ ∂_μ∂_νA^ν
    s.add(c(-1, 2), sum1_s(d, |mu| p.z.times_sigma(up(mu)).left_mul(&p.zb2).right_mul(&f.div_a(&[mu]))));
    // − i∂_μM ζσ^μ
    s.add(ci(-1, 1), sum1_s(d, |mu| p.z.times_sigma(up(mu)).left_mul(&f.m(&[mu]))));
    // + ½ ζ² ζ̄ ∂²M
    s.add(c(1, 2), p.zb.left_mul(&p.z2).right_mul(&dalembertian(&f.m(&[]))));
    // + (i/2) ζ̄² ∂_μκσ^μ
    s.add(ci(1, 2), sum1_s(d, |mu| f.kappa(&[mu]).times_sigma(up(mu)).left_mul(&p.zb2)));
    // + λ̄
    s.add(c(1, 1), f.lamb(&[]));
    // − (i/2) (ζσ^νζ̄) ∂_μλ̄σ̄_νσ^μ
    s.add(
        ci(-1, 2),
        sum2_s(d, |nu, mu| f.lamb(&[mu]).times_sigma_bar(dn(nu)).times_sigma(up(mu)).left_mul(&p.zsz(up(nu)))),
    );
    // − i (ζσ^μζ̄) ∂_μλ̄
    s.add(ci(-1, 1), sum1_s(d, |mu| f.lamb(&[mu]).left_mul(&p.zsz(up(mu)))));
    // + 2ζ̄ D
    s.add(c(2, 1), p.zb.right_mul(&f.dd(&[])));
    s.finish()
}

/// D′
pub fn d_prime(fields: &Components) -> Expression {
    let p = Params::new();
    let f = F(fields);
    let mut s = Sum::new();
    // (1/16) ζ²ζ̄² ∂²∂²φ
    s.add(c(1, 16), p.z2zb2.mul(&dalembertian(&dalembertian(&f.phi(&[])))));
    // − (i/8) ζ² ∂_μ∂²ψσ^μζ̄
    s.add(ci(-1, 8), sum1(|mu| p.z2.mul(&box_s(&f.psi(&[mu])).sigma_dot(up(mu), &p.zb))));
    // + (i/8) ζ̄² ζσ^μ∂_μ∂²χ̄
    s.add(ci(1, 8), sum1(|mu| p.zb2.mul(&p.z.sigma_dot(up(mu), &box_s(&f.chib(&[mu]))))));
    // − ¼ ζσ^μζ̄ (∂²A_μ − 2∂_μ∂_νA^ν)
    s.add(
        c(-1, 4),
        sum1(|mu| p.zsz(up(mu)).mul(&(dalembertian(&f.a(mu, &[])) - f.div_a(&[mu]).scale(&c(2, 1))))),
    );
    // + ¼ ζ² ∂²M
    s.add(c(1, 4), p.z2.mul(&dalembertian(&f.m(&[]))));
    // + ¼ ζ̄² ∂²N
    s.add(c(1, 4), p.zb2.mul(&dalembertian(&f.n(&[]))));
    // − (i/2) ∂_μκσ^μζ̄
    s.add(ci(-1, 2), sum1(|mu| f.kappa(&[mu]).sigma_dot(up(mu), &p.zb)));
    // + (i/2) ζσ^μ∂_μλ̄
    s.add(ci(1, 2), sum1(|mu| p.z.sigma_dot(up(mu), &f.lamb(&[mu]))));
    // + D
    s.add(c(1, 1), f.dd(&[]));
    s.0
}

/// All nine transformed components.
pub fn tabulated_linear_all(fields: &Components) -> Components {
    Components {
        phi: phi_prime(fields),
        psi: psi_prime(fields),
        chi_bar: chi_bar_prime(fields),
        a: std::array::from_fn(|mu| a_prime(fields, mu as u8)),
        m: m_prime(fields),
        n: n_prime(fields),
        kappa: kappa_prime(fields),
        lambda_bar: lambda_bar_prime(fields),
        d: d_prime(fields),
    }
}

/// Entries of one transformed component (1, 2 or 4 of them).
pub fn tabulated_linear(component: Component, fields: &Components) -> Vec<Expression> {
    let lower = |s: Spinor| s.lower().comps.to_vec();
    match component {
        Component::Phi => vec![phi_prime(fields)],
        Component::Psi => lower(psi_prime(fields)),
        Component::ChiBar => lower(chi_bar_prime(fields)),
        Component::A => (0..4u8).map(|mu| a_prime(fields, mu)).collect(),
        Component::M => vec![m_prime(fields)],
        Component::N => vec![n_prime(fields)],
        Component::Kappa => lower(kappa_prime(fields)),
        Component::LambdaBar => lower(lambda_bar_prime(fields)),
        Component::D => vec![d_prime(fields)],
    }
}

/// Chiral φ′
pub fn chiral_phi_prime(fields: &ChiralComponents) -> Expression {
    let p = Params::new();
    let phi = |d: &[u8]| derive(&fields.phi, d);
    let psi = |d: &[u8]| spinor_derive(&fields.psi, d);
    let mut s = Sum::new();
    // φ
    s.add(c(1, 1), phi(&[]));
    // + iζσ^μζ̄ ∂_μφ
    s.add(ci(1, 1), sum1(|mu| p.zsz(up(mu)).mul(&phi(&[mu]))));
    // + ¼ ζ²ζ̄² ∂²φ
    s.add(c(1, 4), p.z2zb2.mul(&dalembertian(&phi(&[]))));
    // + ζ·ψ
    s.add(c(1, 1), p.z.dot(&psi(&[])));
    // − (i/2) ζ² ∂_μψσ^μζ̄
    s.add(ci(-1, 2), sum1(|mu| p.z2.mul(&psi(&[mu]).sigma_dot(up(mu), &p.zb))));
    // + ζ² F
    s.add(c(1, 1), p.z2.mul(&fields.f));
    s.0
}

/// Chiral ψ′_α
pub fn chiral_psi_prime(fields: &ChiralComponents) -> Spinor {
    let p = Params::new();
    let phi = |d: &[u8]| derive(&fields.phi, d);
    let psi = |d: &[u8]| spinor_derive(&fields.psi, d);
    let ff = |d: &[u8]| derive(&fields.f, d);
    let u = Chirality::Undotted;
    let mut s = SpinorSum::new(u);
    // 2iσ^μζ̄ ∂_μφ
    s.add(ci(2, 1), sum1_s(u, |mu| Spinor::sigma_times(up(mu), &p.zb).right_mul(&phi(&[mu]))));
    // + ζ ζ̄² ∂²φ
    s.add(c(1, 1), p.z.right_mul(&p.zb2.mul(&dalembertian(&phi(&[])))));
    // + ψ
    s.add(c(1, 1), psi(&[]));
    // + (i/2) (ζσ_νζ̄)(σ^μσ̄^ν − σ^νσ̄^μ)∂_μψ
    s.add(
        ci(1, 2),
        sum2_s(u, |nu, mu| {
            let dpsi = psi(&[mu]);
            let a = Spinor::sigma_times(up(mu), &Spinor::sigma_bar_times(up(nu), &dpsi));
            let b = Spinor::sigma_times(up(nu), &Spinor::sigma_bar_times(up(mu), &dpsi));
            (&a - &b).left_mul(&p.zsz(dn(nu)))
        }),
    );
    // − ¼ ζ²ζ̄² ∂²ψ
    s.add(c(-1, 4), box_s(&psi(&[])).left_mul(&p.z2zb2));
    // + 2ζ F
    s.add(c(2, 1), p.z.right_mul(&ff(&[])));
    // + iζ² σ^μζ̄ ∂_μF
    s.add(ci(1, 1), sum1_s(u, |mu| Spinor::sigma_times(up(mu), &p.zb).left_mul(&p.z2).right_mul(&ff(&[mu]))));
    s.finish()
}

/// Chiral F′
pub fn chiral_f_prime(fields: &ChiralComponents) -> Expression {
    let p = Params::new();
    let phi = |d: &[u8]| derive(&fields.phi, d);
    let psi = |d: &[u8]| spinor_derive(&fields.psi, d);
    let ff = |d: &[u8]| derive(&fields.f, d);
    let mut s = Sum::new();
    // ζ̄² ∂²φ
    s.add(c(1, 1), p.zb2.mul(&dalembertian(&phi(&[]))));
    // − i∂_μψσ^μζ̄
    s.add(ci(-1, 1), sum1(|mu| psi(&[mu]).sigma_dot(up(mu), &p.zb)));
    // + ½ ζ̄² ζ·∂²ψ
    s.add(c(1, 2), p.zb2.mul(&p.z.dot(&box_s(&psi(&[])))));
    // + F
    s.add(c(1, 1), ff(&[]));
    // − iζσ^μζ̄ ∂_μF
    s.add(ci(-1, 1), sum1(|mu| p.zsz(up(mu)).mul(&ff(&[mu]))));
    // + ¼ ζ²ζ̄² ∂²F
    s.add(c(1, 4), p.z2zb2.mul(&dalembertian(&ff(&[]))));
    s.0
}

pub fn tabulated_chiral_all(fields: &ChiralComponents) -> ChiralComponents {
    ChiralComponents {
        phi: chiral_phi_prime(fields),
        psi: chiral_psi_prime(fields),
        f: chiral_f_prime(fields),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grassmann::Symbol;
    use crate::superspace::fields::{scalar, spinor};

    fn only(keep: Component) -> Components {
        let atoms = Components::atoms();
        let zero = Components::atoms().map(|_| Expression::zero());
        let mut out = zero;
        match keep {
            Component::Phi => out.phi = atoms.phi,
            Component::Psi => out.psi = atoms.psi,
            Component::ChiBar => out.chi_bar = atoms.chi_bar,
            Component::A => out.a = atoms.a,
            Component::M => out.m = atoms.m,
            Component::N => out.n = atoms.n,
            Component::Kappa => out.kappa = atoms.kappa,
            Component::LambdaBar => out.lambda_bar = atoms.lambda_bar,
            Component::D => out.d = atoms.d,
        }
        out
    }

    #[test]
    fn phi_prime_of_d_only() {
        let p = Params::new();
        assert_eq!(phi_prime(&only(Component::D)), p.z2zb2.mul(&scalar(Symbol::D, &[])));
    }

    #[test]
    fn d_prime_of_phi_only() {
        let p = Params::new();
        let phi = scalar(Symbol::Phi, &[]);
        let expected = p.z2zb2.mul(&dalembertian(&dalembertian(&phi))).scale(&c(1, 16));
        assert_eq!(d_prime(&only(Component::Phi)), expected);
    }

    #[test]
    fn m_prime_of_lambda_only() {
        let p = Params::new();
        let lam = spinor(Symbol::LambdaBar, &[]);
        let mut expected = p.zb.dot(&lam);
        for mu in 0..4u8 {
            expected.add_scaled(&p.zb2.mul(&p.z.sigma_dot(up(mu), &lam.derive(mu))), &ci(1, 2));
        }
        assert_eq!(m_prime(&only(Component::LambdaBar)), expected);
    }

    #[test]
    fn chiral_laws_with_f_only() {
        let p = Params::new();
        let fields = ChiralComponents {
            phi: Expression::zero(),
            psi: Spinor::zero(Chirality::Undotted, Position::Lower),
            f: scalar(Symbol::F, &[]),
        };
        assert_eq!(chiral_phi_prime(&fields), p.z2.mul(&fields.f));
        let mut expected = fields.f.clone();
        for mu in 0..4u8 {
            expected.add_scaled(&p.zsz(up(mu)).mul(&scalar(Symbol::F, &[mu])), &ci(-1, 1));
        }
        expected.add_scaled(&p.z2zb2.mul(&dalembertian(&fields.f)), &c(1, 4));
        assert_eq!(chiral_f_prime(&fields), expected);
    }

    #[test]
    fn zero_fields_give_zero() {
        let zero = Components::atoms().map(|_| Expression::zero());
        for comp in Component::ALL {
            assert!(tabulated_linear(comp, &zero).iter().all(Expression::is_zero));
        }
        let zc = ChiralComponents {
            phi: Expression::zero(),
            psi: Spinor::zero(Chirality::Undotted, Position::Lower),
            f: Expression::zero(),
        };
        assert!(chiral_psi_prime(&zc).comps.iter().all(Expression::is_zero));
    }
}
