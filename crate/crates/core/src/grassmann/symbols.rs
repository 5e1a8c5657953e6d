use std::fmt;

/// Family of an odd generator. The derived order is the global generator
/// order: θ < θ̄ < ζ < ζ̄ < auxiliary spinors (by name, undotted first).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum GenKind {
    Theta,
    ThetaBar,
    Zeta,
    ZetaBar,
    /// Abstract odd spinor used for identity checks and extra parameter sets.
    Aux { name: &'static str, dotted: bool },
}

/// An anticommuting coordinate with an upper spinor index (`0` or `1`,
/// displayed as 1, 2).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct OddGenerator {
    pub kind: GenKind,
    pub index: u8,
}

impl OddGenerator {
    pub fn new(kind: GenKind, index: u8) -> Self {
        assert!(index < 2, "spinor index out of range: {index}");
        OddGenerator { kind, index }
    }

    pub fn theta(index: u8) -> Self {
        Self::new(GenKind::Theta, index)
    }

    pub fn theta_bar(index: u8) -> Self {
        Self::new(GenKind::ThetaBar, index)
    }

    pub fn zeta(index: u8) -> Self {
        Self::new(GenKind::Zeta, index)
    }

    pub fn zeta_bar(index: u8) -> Self {
        Self::new(GenKind::ZetaBar, index)
    }

    pub fn aux(name: &'static str, dotted: bool, index: u8) -> Self {
        Self::new(GenKind::Aux { name, dotted }, index)
    }

    pub fn is_dotted(&self) -> bool {
        match self.kind {
            GenKind::ThetaBar | GenKind::ZetaBar => true,
            GenKind::Theta | GenKind::Zeta => false,
            GenKind::Aux { dotted, .. } => dotted,
        }
    }

    /// θ or θ̄.
    pub fn is_theta(&self) -> bool {
        matches!(self.kind, GenKind::Theta | GenKind::ThetaBar)
    }

    /// ζ or ζ̄.
    pub fn is_zeta(&self) -> bool {
        matches!(self.kind, GenKind::Zeta | GenKind::ZetaBar)
    }

    /// Complex conjugate: θ^α ↔ θ̄^α̇ with the same numeral index.
    pub fn conjugate(&self) -> Self {
        let kind = match self.kind {
            GenKind::Theta => GenKind::ThetaBar,
            GenKind::ThetaBar => GenKind::Theta,
            GenKind::Zeta => GenKind::ZetaBar,
            GenKind::ZetaBar => GenKind::Zeta,
            GenKind::Aux { name, dotted } => GenKind::Aux { name, dotted: !dotted },
        };
        OddGenerator { kind, index: self.index }
    }
}

impl fmt::Display for OddGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let i = self.index + 1;
        match self.kind {
            GenKind::Theta => write!(f, "th^{i}"),
            GenKind::ThetaBar => write!(f, "thb^{i}"),
            GenKind::Zeta => write!(f, "ze^{i}"),
            GenKind::ZetaBar => write!(f, "zeb^{i}"),
            GenKind::Aux { name, dotted: false } => write!(f, "{name}^{i}"),
            GenKind::Aux { name, dotted: true } => write!(f, "{name}b^{i}"),
        }
    }
}

/// Component-field symbols, with their complex conjugates.
///
/// Spinor fields carry a lower index: ψ_α, χ̄_α̇, κ_α, λ̄_α̇ and the conjugates
/// ψ̄_α̇, χ_α, κ̄_α̇, λ_α. `FieldStrength` is a formal antisymmetric tensor
/// used by the dual-field-strength check; `Coord` is the coordinate x^μ
/// itself, needed by the orbital part of the Lorentz generators.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Symbol {
    Phi,
    Psi,
    ChiBar,
    A,
    M,
    N,
    Kappa,
    LambdaBar,
    D,
    F,
    PhiConj,
    PsiBar,
    Chi,
    AConj,
    MConj,
    NConj,
    KappaBar,
    Lambda,
    DConj,
    FConj,
    FieldStrength,
    Coord,
}

/// Index structure of a symbol.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SlotKind {
    Scalar,
    Undotted,
    Dotted,
    Vector,
    Tensor,
}

impl Symbol {
    pub const ALL: [Symbol; 22] = [
        Symbol::Phi,
        Symbol::Psi,
        Symbol::ChiBar,
        Symbol::A,
        Symbol::M,
        Symbol::N,
        Symbol::Kappa,
        Symbol::LambdaBar,
        Symbol::D,
        Symbol::F,
        Symbol::PhiConj,
        Symbol::PsiBar,
        Symbol::Chi,
        Symbol::AConj,
        Symbol::MConj,
        Symbol::NConj,
        Symbol::KappaBar,
        Symbol::Lambda,
        Symbol::DConj,
        Symbol::FConj,
        Symbol::FieldStrength,
        Symbol::Coord,
    ];

    pub fn slot_kind(self) -> SlotKind {
        use Symbol::*;
        match self {
            Psi | Kappa | Chi | Lambda => SlotKind::Undotted,
            ChiBar | LambdaBar | PsiBar | KappaBar => SlotKind::Dotted,
            A | AConj | Coord => SlotKind::Vector,
            FieldStrength => SlotKind::Tensor,
            Phi | M | N | D | F | PhiConj | MConj | NConj | DConj | FConj => SlotKind::Scalar,
        }
    }

    pub fn is_odd(self) -> bool {
        matches!(self.slot_kind(), SlotKind::Undotted | SlotKind::Dotted)
    }

    /// Complex conjugate symbol. `FieldStrength` and `Coord` are real.
    pub fn conjugate(self) -> Symbol {
        use Symbol::*;
        match self {
            Phi => PhiConj,
            PhiConj => Phi,
            Psi => PsiBar,
            PsiBar => Psi,
            ChiBar => Chi,
            Chi => ChiBar,
            A => AConj,
            AConj => A,
            M => MConj,
            MConj => M,
            N => NConj,
            NConj => N,
            Kappa => KappaBar,
            KappaBar => Kappa,
            LambdaBar => Lambda,
            Lambda => LambdaBar,
            D => DConj,
            DConj => D,
            F => FConj,
            FConj => F,
            FieldStrength => FieldStrength,
            Coord => Coord,
        }
    }

    pub fn name(self) -> &'static str {
        use Symbol::*;
        match self {
            Phi => "phi",
            Psi => "psi",
            ChiBar => "chibar",
            A => "A",
            M => "M",
            N => "N",
            Kappa => "kappa",
            LambdaBar => "lambdabar",
            D => "D",
            F => "F",
            PhiConj => "phi+",
            PsiBar => "psibar",
            Chi => "chi",
            AConj => "A+",
            MConj => "M+",
            NConj => "N+",
            KappaBar => "kappabar",
            Lambda => "lambda",
            DConj => "D+",
            FConj => "F+",
            FieldStrength => "Fs",
            Coord => "x",
        }
    }
}

/// Index attached to a field atom. Spinor indices are lower, 0-based.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Slot {
    None,
    Undotted(u8),
    Dotted(u8),
    Vector(u8),
    Tensor(u8, u8),
}

impl Slot {
    fn kind(self) -> SlotKind {
        match self {
            Slot::None => SlotKind::Scalar,
            Slot::Undotted(_) => SlotKind::Undotted,
            Slot::Dotted(_) => SlotKind::Dotted,
            Slot::Vector(_) => SlotKind::Vector,
            Slot::Tensor(..) => SlotKind::Tensor,
        }
    }
}

/// A component field evaluated at x, with a sorted multiset of spacetime
/// derivatives ∂_{μ1}…∂_{μn} applied.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct FieldAtom {
    pub symbol: Symbol,
    pub slot: Slot,
    derivs: Vec<u8>,
}

impl FieldAtom {
    pub fn new(symbol: Symbol, slot: Slot) -> Self {
        assert_eq!(
            symbol.slot_kind(),
            slot.kind(),
            "slot {slot:?} does not fit symbol {symbol:?}"
        );
        match slot {
            Slot::Undotted(i) | Slot::Dotted(i) => assert!(i < 2),
            Slot::Vector(m) => assert!(m < 4),
            Slot::Tensor(m, n) => assert!(m < 4 && n < 4),
            Slot::None => {}
        }
        FieldAtom { symbol, slot, derivs: Vec::new() }
    }

    pub fn scalar(symbol: Symbol) -> Self {
        Self::new(symbol, Slot::None)
    }

    /// A spinor field component; dottedness follows the symbol.
    pub fn spinor(symbol: Symbol, index: u8) -> Self {
        match symbol.slot_kind() {
            SlotKind::Dotted => Self::new(symbol, Slot::Dotted(index)),
            _ => Self::new(symbol, Slot::Undotted(index)),
        }
    }

    pub fn vector(symbol: Symbol, mu: u8) -> Self {
        Self::new(symbol, Slot::Vector(mu))
    }

    pub fn coord(mu: u8) -> Self {
        Self::new(Symbol::Coord, Slot::Vector(mu))
    }

    /// Applies ∂_μ for every μ in `derivs`.
    pub fn with_derivs(mut self, derivs: &[u8]) -> Self {
        assert!(self.symbol != Symbol::Coord || derivs.is_empty());
        assert!(derivs.iter().all(|&m| m < 4));
        self.derivs.extend_from_slice(derivs);
        self.derivs.sort_unstable();
        self
    }

    pub fn derivs(&self) -> &[u8] {
        &self.derivs
    }

    pub fn is_odd(&self) -> bool {
        self.symbol.is_odd()
    }

    /// Same atom with the symbol replaced (the slot keeps its numeral, with
    /// dotted/undotted following the new symbol).
    pub fn renamed(&self, symbol: Symbol) -> Self {
        let slot = match (self.slot, symbol.slot_kind()) {
            (Slot::Undotted(i) | Slot::Dotted(i), SlotKind::Undotted) => Slot::Undotted(i),
            (Slot::Undotted(i) | Slot::Dotted(i), SlotKind::Dotted) => Slot::Dotted(i),
            (slot, _) => slot,
        };
        let mut atom = FieldAtom::new(symbol, slot);
        atom.derivs = self.derivs.clone();
        atom
    }
}

impl fmt::Display for FieldAtom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.derivs.is_empty() {
            let d: Vec<String> = self.derivs.iter().map(u8::to_string).collect();
            write!(f, "d[{}]", d.join(","))?;
        }
        f.write_str(self.symbol.name())?;
        match self.slot {
            Slot::None => Ok(()),
            Slot::Undotted(i) | Slot::Dotted(i) => write!(f, "_{}", i + 1),
            Slot::Vector(m) if self.symbol == Symbol::Coord => write!(f, "^{m}"),
            Slot::Vector(m) => write!(f, "_{m}"),
            Slot::Tensor(m, n) => write!(f, "_{m}{n}"),
        }
    }
}

/// A letter of a graded word: generators order before odd field atoms.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum OddSymbol {
    Gen(OddGenerator),
    Field(FieldAtom),
}

impl fmt::Display for OddSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OddSymbol::Gen(g) => g.fmt(f),
            OddSymbol::Field(a) => a.fmt(f),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn documented_generator_order() {
        let order = [
            OddGenerator::theta(0),
            OddGenerator::theta(1),
            OddGenerator::theta_bar(0),
            OddGenerator::theta_bar(1),
            OddGenerator::zeta(0),
            OddGenerator::zeta(1),
            OddGenerator::zeta_bar(0),
            OddGenerator::zeta_bar(1),
            OddGenerator::aux("chi", false, 0),
            OddGenerator::aux("chi", true, 1),
            OddGenerator::aux("psi", false, 0),
        ];
        assert!(order.windows(2).all(|w| w[0] < w[1]));
        let field = OddSymbol::Field(FieldAtom::spinor(Symbol::Psi, 0));
        assert!(OddSymbol::Gen(order[10]) < field);
    }

    #[test]
    fn parities() {
        for s in Symbol::ALL {
            let odd = matches!(
                s,
                Symbol::Psi
                    | Symbol::ChiBar
                    | Symbol::Kappa
                    | Symbol::LambdaBar
                    | Symbol::PsiBar
                    | Symbol::Chi
                    | Symbol::KappaBar
                    | Symbol::Lambda
            );
            assert_eq!(s.is_odd(), odd, "{s:?}");
            assert_eq!(s.conjugate().conjugate(), s);
            assert_eq!(s.conjugate().is_odd(), s.is_odd());
        }
    }

    #[test]
    fn derivative_multiset_is_sorted() {
        let a = FieldAtom::scalar(Symbol::Phi).with_derivs(&[3, 0, 2]);
        let b = FieldAtom::scalar(Symbol::Phi).with_derivs(&[2, 3, 0]);
        assert_eq!(a, b);
        assert_eq!(a.to_string(), "d[0,2,3]phi");
    }

    #[test]
    #[should_panic]
    fn slot_must_match_symbol() {
        FieldAtom::new(Symbol::Phi, Slot::Undotted(0));
    }
}
