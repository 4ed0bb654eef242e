use serde::{Deserialize, Serialize};

use super::Scalar;

/// The coefficient rings the engine computes over.
///
/// * `LazardRational`: `ℚ[t₁, t₂, …]` with `deg tᵢ = −i`, the rationalized
///   Lazard ring presented through the logarithm of the universal law.
/// * `IntegerAdditive` / `RationalAdditive`: `ℤ` or `ℚ` in degree 0.
/// * `LaurentMultiplicative` / `RationalMultiplicative`: `ℤ[β, β⁻¹]` or
///   `ℚ[β, β⁻¹]` with `deg β = −1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CoefficientRing {
    LazardRational,
    IntegerAdditive,
    LaurentMultiplicative,
    RationalAdditive,
    RationalMultiplicative,
}

impl CoefficientRing {
    pub fn is_rational(self) -> bool {
        matches!(
            self,
            Self::LazardRational | Self::RationalAdditive | Self::RationalMultiplicative
        )
    }

    pub fn is_integral(self) -> bool {
        !self.is_rational()
    }

    pub fn is_additive(self) -> bool {
        matches!(self, Self::IntegerAdditive | Self::RationalAdditive)
    }

    pub fn is_multiplicative(self) -> bool {
        matches!(
            self,
            Self::LaurentMultiplicative | Self::RationalMultiplicative
        )
    }

    /// Number of coefficient generators; `None` for the unbounded Lazard family.
    pub fn generator_count(self) -> Option<usize> {
        match self {
            Self::LazardRational => None,
            Self::IntegerAdditive | Self::RationalAdditive => Some(0),
            Self::LaurentMultiplicative | Self::RationalMultiplicative => Some(1),
        }
    }

    pub fn has_generator(self, index: usize) -> bool {
        self.generator_count().is_none_or(|n| index < n)
    }

    /// Cohomological degree of generator `index` (0-based).
    pub fn generator_degree(self, index: usize) -> i64 {
        match self {
            Self::LazardRational => -(index as i64 + 1),
            _ => -1,
        }
    }

    pub fn generator_name(self, index: usize) -> String {
        match self {
            Self::LazardRational => format!("t{}", subscript(index as u64 + 1)),
            _ => "β".to_string(),
        }
    }

    /// Only `β` may carry a negative exponent.
    pub fn generator_invertible(self, index: usize) -> bool {
        self.is_multiplicative() && index == 0
    }

    pub fn scalar_is_unit(self, s: &Scalar) -> bool {
        if self.is_rational() {
            !s.is_zero()
        } else {
            s.is_integer() && s.abs().is_one()
        }
    }

    pub fn rationalization(self) -> Self {
        match self {
            Self::IntegerAdditive => Self::RationalAdditive,
            Self::LaurentMultiplicative => Self::RationalMultiplicative,
            other => other,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Self::LazardRational => "lazard-rational",
            Self::IntegerAdditive => "integer-additive",
            Self::LaurentMultiplicative => "laurent-multiplicative",
            Self::RationalAdditive => "rational-additive",
            Self::RationalMultiplicative => "rational-multiplicative",
        }
    }

    /// Human-readable name of the ring itself.
    pub fn display_name(self) -> &'static str {
        match self {
            Self::LazardRational => "ℚ[t₁,t₂,…]",
            Self::IntegerAdditive => "ℤ",
            Self::LaurentMultiplicative => "ℤ[β,β⁻¹]",
            Self::RationalAdditive => "ℚ",
            Self::RationalMultiplicative => "ℚ[β,β⁻¹]",
        }
    }
}

pub(crate) fn subscript(n: u64) -> String {
    const DIGITS: [char; 10] = ['₀', '₁', '₂', '₃', '₄', '₅', '₆', '₇', '₈', '₉'];
    n.to_string()
        .chars()
        .map(|c| DIGITS[c.to_digit(10).unwrap() as usize])
        .collect()
}

pub(crate) fn superscript(n: i64) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    let mut out = String::new();
    if n < 0 {
        out.push('⁻');
    }
    for c in n.unsigned_abs().to_string().chars() {
        out.push(DIGITS[c.to_digit(10).unwrap() as usize]);
    }
    out
}
