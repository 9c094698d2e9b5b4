//! Three-valued sign algebra with set-valued results.
//!
//! Adding values of opposite sign is ambiguous: the result can be negative,
//! zero, or positive depending on the relative magnitudes, so `⊕` and `⊖`
//! return *sets* of signs. A [`Magnitude`] assumption (`|a| < |b|`, `=`, `>`)
//! collapses the ambiguous case back to a single sign; everywhere else it
//! imposes no constraint.

use std::fmt;

use crate::model::{MAGNITUDE_DOMAIN, SIGN_DOMAIN};

/// A qualitative sign: the value domain of deviation parameters.
///
/// Index order (minus < zero < plus) matches the builtin `Sign` domain and is
/// used for canonical output only.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SignValue {
    Minus,
    Zero,
    Plus,
}

impl SignValue {
    pub const ALL: [SignValue; 3] = [SignValue::Minus, SignValue::Zero, SignValue::Plus];

    pub fn name(self) -> &'static str {
        match self {
            SignValue::Minus => "minus",
            SignValue::Zero => "zero",
            SignValue::Plus => "plus",
        }
    }

    /// Index into the builtin `Sign` domain.
    pub fn index(self) -> usize {
        match self {
            SignValue::Minus => 0,
            SignValue::Zero => 1,
            SignValue::Plus => 2,
        }
    }

    pub fn from_index(idx: usize) -> Option<SignValue> {
        SignValue::ALL.get(idx).copied()
    }

    /// Swaps plus and minus, fixes zero.
    pub fn negate(self) -> SignValue {
        match self {
            SignValue::Minus => SignValue::Plus,
            SignValue::Zero => SignValue::Zero,
            SignValue::Plus => SignValue::Minus,
        }
    }
}

impl fmt::Display for SignValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A comparison of absolute magnitudes, `|a|` against `|b|`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Magnitude {
    Lt,
    Eq,
    Gt,
}

impl Magnitude {
    pub const ALL: [Magnitude; 3] = [Magnitude::Lt, Magnitude::Eq, Magnitude::Gt];

    pub fn name(self) -> &'static str {
        match self {
            Magnitude::Lt => "lt",
            Magnitude::Eq => "eq",
            Magnitude::Gt => "gt",
        }
    }

    /// Index into the builtin `Magnitude` domain.
    pub fn index(self) -> usize {
        match self {
            Magnitude::Lt => 0,
            Magnitude::Eq => 1,
            Magnitude::Gt => 2,
        }
    }

    pub fn from_index(idx: usize) -> Option<Magnitude> {
        Magnitude::ALL.get(idx).copied()
    }

    /// The comparison operator this assumption asserts between `|a|` and `|b|`.
    pub fn symbol(self) -> &'static str {
        match self {
            Magnitude::Lt => "<",
            Magnitude::Eq => "=",
            Magnitude::Gt => ">",
        }
    }
}

impl fmt::Display for Magnitude {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A set of signs, the result type of the set-valued operators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SignSet(u8);

impl SignSet {
    pub const EMPTY: SignSet = SignSet(0);
    pub const ALL: SignSet = SignSet(0b111);

    pub fn singleton(s: SignValue) -> SignSet {
        SignSet(1 << s.index())
    }

    pub fn from_signs(signs: &[SignValue]) -> SignSet {
        signs.iter().fold(SignSet::EMPTY, |acc, &s| acc.with(s))
    }

    pub fn with(self, s: SignValue) -> SignSet {
        SignSet(self.0 | 1 << s.index())
    }

    pub fn contains(self, s: SignValue) -> bool {
        self.0 & (1 << s.index()) != 0
    }

    pub fn union(self, other: SignSet) -> SignSet {
        SignSet(self.0 | other.0)
    }

    pub fn is_subset(self, other: SignSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Members in canonical order (minus, zero, plus).
    pub fn iter(self) -> impl Iterator<Item = SignValue> {
        SignValue::ALL.into_iter().filter(move |s| self.contains(*s))
    }
}

impl fmt::Display for SignSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, s) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, "}}")
    }
}

/// `[a] ⊕ [b]`: zero is the identity, equal nonzero signs reinforce, and
/// opposite nonzero signs are ambiguous. Commutative.
pub fn sign_add(a: SignValue, b: SignValue) -> SignSet {
    use SignValue::*;
    match (a, b) {
        (Zero, x) | (x, Zero) => SignSet::singleton(x),
        (Minus, Minus) => SignSet::singleton(Minus),
        (Plus, Plus) => SignSet::singleton(Plus),
        (Minus, Plus) | (Plus, Minus) => SignSet::ALL,
    }
}

/// `[a] ⊖ [b] = [a] ⊕ [-b]`.
pub fn sign_sub(a: SignValue, b: SignValue) -> SignSet {
    sign_add(a, b.negate())
}

/// `[a] ⊕ [b]` under the magnitude assumption `m` comparing `|a]` with `|b|`.
///
/// For opposite nonzero signs the larger operand wins: `lt` yields the sign
/// of `b`, `eq` yields zero, `gt` yields the sign of `a`. In every other case
/// the assumption imposes no constraint and the (already singleton) unrefined
/// result is returned.
pub fn sign_add_refined(a: SignValue, b: SignValue, m: Magnitude) -> SignSet {
    use SignValue::*;
    match (a, b) {
        (Minus, Plus) | (Plus, Minus) => SignSet::singleton(match m {
            Magnitude::Lt => b,
            Magnitude::Eq => Zero,
            Magnitude::Gt => a,
        }),
        _ => sign_add(a, b),
    }
}

/// `[a] ⊖ [b]` under a magnitude assumption. `m` still compares `|a|` with
/// `|b|` (negation preserves magnitude).
pub fn sign_sub_refined(a: SignValue, b: SignValue, m: Magnitude) -> SignSet {
    sign_add_refined(a, b.negate(), m)
}

/// Relational view of a possibly-refined sign sum, on `Sign`/`Magnitude`
/// domain indices: does `c = a ⊕ b` admit this triple (under `m`, if given)?
/// Out-of-range indices never satisfy the constraint.
pub fn signsum_allows(a: usize, b: usize, c: usize, m: Option<usize>) -> bool {
    let (Some(a), Some(b), Some(c)) = (
        SignValue::from_index(a),
        SignValue::from_index(b),
        SignValue::from_index(c),
    ) else {
        return false;
    };
    match m {
        None => sign_add(a, b).contains(c),
        Some(m) => match Magnitude::from_index(m) {
            Some(m) => sign_add_refined(a, b, m).contains(c),
            None => false,
        },
    }
}

/// Relational view of a possibly-refined sign difference, as [`signsum_allows`].
pub fn signsub_allows(a: usize, b: usize, c: usize, m: Option<usize>) -> bool {
    let Some(b) = SignValue::from_index(b) else {
        return false;
    };
    signsum_allows(a, b.negate().index(), c, m)
}
