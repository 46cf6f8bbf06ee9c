//! The label group `C2 = {1, t}`.

use std::fmt;
use std::ops::Mul;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    #[default]
    One,
    T,
}

impl Label {
    pub const ALL: [Label; 2] = [Label::One, Label::T];

    pub fn is_twist(self) -> bool {
        self == Label::T
    }

    /// `+1` for the unit, `-1` for `t` (the JSON encoding).
    pub fn sign(self) -> i8 {
        match self {
            Label::One => 1,
            Label::T => -1,
        }
    }

    pub fn from_sign(sign: i64) -> Option<Label> {
        match sign {
            1 => Some(Label::One),
            -1 => Some(Label::T),
            _ => None,
        }
    }

    pub fn bit(self) -> u32 {
        self as u32
    }
}

impl Mul for Label {
    type Output = Label;

    fn mul(self, rhs: Label) -> Label {
        if self == rhs {
            Label::One
        } else {
            Label::T
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Label::One => "1",
            Label::T => "t",
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_law() {
        assert_eq!(Label::T * Label::T, Label::One);
        for a in Label::ALL {
            assert_eq!(a * Label::One, a);
            for b in Label::ALL {
                assert_eq!(a * b, b * a);
            }
        }
    }

    #[test]
    fn sign_roundtrip() {
        for a in Label::ALL {
            assert_eq!(Label::from_sign(a.sign() as i64), Some(a));
        }
        assert_eq!(Label::from_sign(0), None);
    }
}
