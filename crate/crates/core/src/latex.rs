//! LaTeX rendering of expressions.
//!
//! Terms appear in normal-form order. Complete pairs θ¹θ², θ̄¹θ̄², ζ¹ζ², ζ̄¹ζ̄²
//! inside a monomial are written as the squares θ², θ̄², ζ², ζ̄² with the
//! coefficient adjusted; all other letters are printed as components.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::grassmann::{Expression, FieldAtom, GenKind, OddGenerator, Slot, Symbol, TermKey};
use crate::scalar::Scalar;

fn symbol_latex(s: Symbol) -> &'static str {
    use Symbol::*;
    match s {
        Phi => r"\phi",
        Psi => r"\psi",
        ChiBar => r"\overline{\chi}",
        A => "A",
        M => "M",
        N => "N",
        Kappa => r"\kappa",
        LambdaBar => r"\overline{\lambda}",
        D => "D",
        F => "F",
        PhiConj => r"\phi^+",
        PsiBar => r"\overline{\psi}",
        Chi => r"\chi",
        AConj => "A^+",
        MConj => "M^+",
        NConj => "N^+",
        KappaBar => r"\overline{\kappa}",
        Lambda => r"\lambda",
        DConj => "D^+",
        FConj => "F^+",
        FieldStrength => "F",
        Coord => "x",
    }
}

fn atom_latex(a: &FieldAtom) -> String {
    let mut out = String::new();
    for mu in a.derivs() {
        out.push_str(&format!(r"\partial_{{{mu}}}"));
    }
    out.push_str(symbol_latex(a.symbol));
    match a.slot {
        Slot::None => {}
        Slot::Undotted(i) => out.push_str(&format!("_{{{}}}", i + 1)),
        Slot::Dotted(i) => out.push_str(&format!(r"_{{\dot{{{}}}}}", i + 1)),
        Slot::Vector(m) if a.symbol == Symbol::Coord => out.push_str(&format!("^{{{m}}}")),
        Slot::Vector(m) => out.push_str(&format!("_{{{m}}}")),
        Slot::Tensor(m, n) => out.push_str(&format!("_{{{m}{n}}}")),
    }
    if a.symbol != Symbol::Coord {
        out.push_str("(x)");
    }
    out
}

fn generator_base(kind: GenKind) -> String {
    match kind {
        GenKind::Theta => r"\theta".into(),
        GenKind::ThetaBar => r"\overline{\theta}".into(),
        GenKind::Zeta => r"\zeta".into(),
        GenKind::ZetaBar => r"\overline{\zeta}".into(),
        GenKind::Aux { name, dotted: false } => format!(r"\{name}"),
        GenKind::Aux { name, dotted: true } => format!(r"\overline{{\{name}}}"),
    }
}

fn generator_latex(g: &OddGenerator) -> String {
    let idx = if g.is_dotted() { format!(r"\dot{{{}}}", g.index + 1) } else { (g.index + 1).to_string() };
    format!("{}^{{{idx}}}", generator_base(g.kind))
}

/// Squares recognized inside a monomial, with the factor relating the
/// component product to the square (θ¹θ² = −½θ², θ̄¹θ̄² = ½θ̄²).
const SQUARES: [(GenKind, i64); 4] =
    [(GenKind::Theta, -1), (GenKind::ThetaBar, 1), (GenKind::Zeta, -1), (GenKind::ZetaBar, 1)];

fn rational_latex(r: &BigRational) -> String {
    let n = r.numer().abs();
    if r.denom().is_one() {
        n.to_string()
    } else {
        format!(r"\frac{{{n}}}{{{}}}", r.denom())
    }
}

/// Returns (negative, magnitude text, whether the magnitude is exactly 1).
fn coefficient_latex(c: &Scalar) -> (bool, String, bool) {
    let (re, im) = (c.re(), c.im());
    if im.is_zero() {
        (re.is_negative(), rational_latex(re), re.abs().is_one())
    } else if re.is_zero() {
        let body = if im.abs().is_one() { r"\mathrm{i}".to_string() } else { format!(r"{}\mathrm{{i}}", rational_latex(im)) };
        (im.is_negative(), body, false)
    } else {
        let sign = if im.is_negative() { "-" } else { "+" };
        let re_s = if re.is_negative() { format!("-{}", rational_latex(re)) } else { rational_latex(re) };
        (false, format!(r"\left({re_s}{sign}{}\mathrm{{i}}\right)", rational_latex(im)), false)
    }
}

fn term_latex(key: &TermKey, c: &Scalar) -> (bool, String) {
    let mut coeff = c.clone();
    let mut squares = Vec::new();
    let mut gens: Vec<OddGenerator> = key.monomial.generators().to_vec();
    for (kind, sign) in SQUARES {
        let pair = [OddGenerator::new(kind, 0), OddGenerator::new(kind, 1)];
        if pair.iter().all(|g| gens.contains(g)) {
            gens.retain(|g| !pair.contains(g));
            coeff = &coeff * &Scalar::frac(sign, 2);
            squares.push(format!("{}^2", generator_base(kind)));
        }
    }
    let mut factors = squares;
    factors.extend(key.fields.even().iter().map(atom_latex));
    factors.extend(gens.iter().map(generator_latex));
    factors.extend(key.fields.odd().iter().map(atom_latex));
    let (negative, mag, unit) = coefficient_latex(&coeff);
    let body = match (factors.is_empty(), unit) {
        (true, _) => mag,
        (false, true) => factors.join(" "),
        (false, false) => format!("{mag} {}", factors.join(" ")),
    };
    (negative, body)
}

/// Deterministic LaTeX for `e`; the zero expression renders as `0`.
pub fn emit_latex(e: &Expression) -> String {
    if e.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (key, c)) in e.terms().enumerate() {
        let (negative, body) = term_latex(key, c);
        match (i, negative) {
            (0, false) => {}
            (0, true) => out.push('-'),
            (_, false) => out.push_str(" + "),
            (_, true) => out.push_str(" - "),
        }
        out.push_str(&body);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spinor::Spinor;

    #[test]
    fn zero_renders_as_zero() {
        assert_eq!(emit_latex(&Expression::zero()), "0");
    }

    #[test]
    fn squares_are_recognized() {
        assert_eq!(emit_latex(&Spinor::zeta().square()), r"\zeta^2");
        assert_eq!(emit_latex(&Spinor::theta_bar().square()), r"\overline{\theta}^2");
    }

    #[test]
    fn coefficients_and_atoms() {
        let phi = Expression::atom(FieldAtom::scalar(Symbol::Phi).with_derivs(&[1]));
        assert_eq!(emit_latex(&phi.scale(&Scalar::imag(-1, 2))), r"-\frac{1}{2}\mathrm{i} \partial_{1}\phi(x)");
        assert_eq!(emit_latex(&Expression::scalar(Scalar::complex((1, 1), (-1, 3)))), r"\left(1-\frac{1}{3}\mathrm{i}\right)");
    }
}
