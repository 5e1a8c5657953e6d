use std::sync::OnceLock;

use crate::scalar::Scalar;

/// 2×2 matrix of exact scalars, indexed `[row][col]`.
pub type Mat2 = [[Scalar; 2]; 2];

/// Value of ε_{0123}. Both signs are supported so every identity containing
/// the four-dimensional Levi-Civita symbol can be checked in either
/// convention.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Eps4 {
    #[default]
    Plus,
    Minus,
}

impl Eps4 {
    pub const BOTH: [Eps4; 2] = [Eps4::Plus, Eps4::Minus];

    pub fn value(self) -> i64 {
        match self {
            Eps4::Plus => 1,
            Eps4::Minus => -1,
        }
    }

    pub fn scalar(self) -> Scalar {
        Scalar::int(self.value())
    }
}

/// A Lorentz index with its position.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VIdx {
    Up(u8),
    Dn(u8),
}

impl VIdx {
    pub fn value(self) -> u8 {
        match self {
            VIdx::Up(m) | VIdx::Dn(m) => m,
        }
    }

    /// η^{μμ} for an upper index, 1 for a lower one (η is diagonal).
    fn raise_factor(self) -> i64 {
        match self {
            VIdx::Up(0) => -1,
            _ => 1,
        }
    }
}

pub fn up(mu: u8) -> VIdx {
    VIdx::Up(mu)
}

pub fn dn(mu: u8) -> VIdx {
    VIdx::Dn(mu)
}

/// Pauli matrices, two-spinor epsilons, the metric and the Levi-Civita
/// symbol.
#[derive(Clone, Debug, PartialEq)]
pub struct PauliTables {
    /// σ_μ with lower spinor indices, `[μ][α][α̇]`.
    pub sigma: [Mat2; 4],
    /// σ̄_μ with upper spinor indices, `[μ][α̇][α]`, built from σ by
    /// σ̄^{α̇α} = ε^{α̇β̇} ε^{αβ} σ_{ββ̇}.
    pub sigma_bar: [Mat2; 4],
    /// η_{μν} = diag(−1, 1, 1, 1); numerically equal to η^{μν}.
    pub eta: [[Scalar; 4]; 4],
    /// ε^{αβ}, and numerically also ε^{α̇β̇}.
    pub eps_upper: Mat2,
    /// ε_{αβ}, and numerically also ε_{α̇β̇}.
    pub eps_lower: Mat2,
    pub eps4: Eps4,
}

fn s(n: i64) -> Scalar {
    Scalar::int(n)
}

fn mat(a: [[Scalar; 2]; 2]) -> Mat2 {
    a
}

impl PauliTables {
    pub fn new(eps4: Eps4) -> Self {
        let i = Scalar::i();
        let sigma = [
            mat([[s(1), s(0)], [s(0), s(1)]]),
            mat([[s(0), s(1)], [s(1), s(0)]]),
            mat([[s(0), -&i], [i.clone(), s(0)]]),
            mat([[s(1), s(0)], [s(0), s(-1)]]),
        ];
        let eps = mat([[s(0), s(1)], [s(-1), s(0)]]);
        let mut sigma_bar: [Mat2; 4] = Default::default();
        for (mu, sb) in sigma_bar.iter_mut().enumerate() {
            for ad in 0..2 {
                for a in 0..2 {
                    let mut acc = Scalar::zero();
                    for bd in 0..2 {
                        for b in 0..2 {
                            acc += &(&(&eps[ad][bd] * &eps[a][b]) * &sigma[mu][b][bd]);
                        }
                    }
                    sb[ad][a] = acc;
                }
            }
        }
        let mut eta: [[Scalar; 4]; 4] = Default::default();
        for (mu, row) in eta.iter_mut().enumerate() {
            row[mu] = if mu == 0 { s(-1) } else { s(1) };
        }
        PauliTables { sigma, sigma_bar, eta, eps_upper: eps.clone(), eps_lower: eps, eps4 }
    }

    /// Shared tables with ε_{0123} = +1. Contractions never involve the
    /// Levi-Civita symbol, so they all use this instance.
    pub fn standard() -> &'static PauliTables {
        static TABLES: OnceLock<PauliTables> = OnceLock::new();
        TABLES.get_or_init(|| PauliTables::new(Eps4::Plus))
    }

    /// σ^μ_{αα̇} or σ_{μ αα̇}.
    pub fn sigma(&self, mu: VIdx, a: usize, ad: usize) -> Scalar {
        &self.sigma[mu.value() as usize][a][ad] * &s(mu.raise_factor())
    }

    /// σ̄^{μ α̇α} or σ̄_μ^{α̇α}.
    pub fn sigma_bar(&self, mu: VIdx, ad: usize, a: usize) -> Scalar {
        &self.sigma_bar[mu.value() as usize][ad][a] * &s(mu.raise_factor())
    }

    /// Metric with both indices in the given positions.
    pub fn metric(&self, mu: VIdx, nu: VIdx) -> Scalar {
        match (mu, nu) {
            (VIdx::Up(m), VIdx::Dn(n)) | (VIdx::Dn(m), VIdx::Up(n)) => {
                if m == n {
                    s(1)
                } else {
                    s(0)
                }
            }
            _ => self.eta[mu.value() as usize][nu.value() as usize].clone(),
        }
    }

    /// Levi-Civita symbol with arbitrary index positions, from
    /// ε_{0123} = eps4 by raising with η.
    pub fn levi_civita(&self, idx: [VIdx; 4]) -> Scalar {
        let v = idx.map(|i| i.value());
        let mut perm = v;
        if (0..4).any(|i| (i + 1..4).any(|j| v[i] == v[j])) {
            return s(0);
        }
        let mut negative = false;
        for i in 0..4 {
            for j in 0..3 - i {
                if perm[j] > perm[j + 1] {
                    perm.swap(j, j + 1);
                    negative = !negative;
                }
            }
        }
        let raised: i64 = idx.iter().map(|i| i.raise_factor()).product();
        let sign = if negative { -1 } else { 1 };
        s(sign * raised * self.eps4.value())
    }

    /// ψ^α = ε^{αβ} ψ_β (dotted indices use the same numeric table).
    pub fn raise_index(&self, psi: &[Scalar; 2], _dotted: bool) -> [Scalar; 2] {
        std::array::from_fn(|a| {
            let mut acc = Scalar::zero();
            for (b, p) in psi.iter().enumerate() {
                acc += &(&self.eps_upper[a][b] * p);
            }
            acc
        })
    }

    /// ψ_β = ψ^α ε_{αβ}.
    pub fn lower_index(&self, psi: &[Scalar; 2], _dotted: bool) -> [Scalar; 2] {
        std::array::from_fn(|b| {
            let mut acc = Scalar::zero();
            for (a, p) in psi.iter().enumerate() {
                acc += &(p * &self.eps_lower[a][b]);
            }
            acc
        })
    }
}

pub fn mat_mul(a: &Mat2, b: &Mat2) -> Mat2 {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            let mut acc = Scalar::zero();
            for k in 0..2 {
                acc += &(&a[i][k] * &b[k][j]);
            }
            acc
        })
    })
}

pub fn mat_sub(a: &Mat2, b: &Mat2) -> Mat2 {
    std::array::from_fn(|i| std::array::from_fn(|j| &a[i][j] - &b[i][j]))
}

pub fn trace(a: &Mat2) -> Scalar {
    &a[0][0] + &a[1][1]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn epsilon_convention() {
        let t = PauliTables::standard();
        assert_eq!(t.eps_upper[0][1], s(1));
        assert_eq!(t.eps_lower[0][1], s(1));
    }

    #[test]
    fn raise_and_lower() {
        let t = PauliTables::standard();
        let psi = [Scalar::frac(2, 3), Scalar::imag(5, 1)];
        // (ψ₁, ψ₂) ↦ (ψ₂, −ψ₁)
        assert_eq!(t.raise_index(&psi, false), [psi[1].clone(), -&psi[0]]);
        for dotted in [false, true] {
            for basis in [[s(1), s(0)], [s(0), s(1)]] {
                assert_eq!(t.raise_index(&t.lower_index(&basis, dotted), dotted), basis);
                assert_eq!(t.lower_index(&t.raise_index(&basis, dotted), dotted), basis);
            }
        }
        assert_eq!(t.raise_index(&[s(0), s(0)], false), [s(0), s(0)]);
    }

    #[test]
    fn sigma_bar_numeric_form() {
        let t = PauliTables::standard();
        assert_eq!(t.sigma_bar[0], t.sigma[0]);
        for i in 1..4 {
            for a in 0..2 {
                for b in 0..2 {
                    assert_eq!(t.sigma_bar[i][a][b], -&t.sigma[i][a][b]);
                }
            }
        }
    }

    #[test]
    fn levi_civita_positions() {
        for eps4 in Eps4::BOTH {
            let t = PauliTables::new(eps4);
            let lower = t.levi_civita([dn(0), dn(1), dn(2), dn(3)]);
            let upper = t.levi_civita([up(0), up(1), up(2), up(3)]);
            assert_eq!(lower, eps4.scalar());
            assert_eq!(upper, -&eps4.scalar());
            assert_eq!(t.levi_civita([dn(1), dn(0), dn(2), dn(3)]), -&lower);
            assert_eq!(t.levi_civita([dn(1), dn(1), dn(2), dn(3)]), s(0));
        }
    }
}
