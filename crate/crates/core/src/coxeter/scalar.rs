//! Exact scalars for root coordinates: rationals, extended by sqrt(5)
//! for the icosahedral types. No floating point.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Reduced rational with i64 parts; intermediate products run in i128
/// and are checked on the way back down.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rat {
    num: i64,
    den: i64, // always > 0
}

fn gcd(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Rat {
    pub const ZERO: Rat = Rat { num: 0, den: 1 };
    pub const ONE: Rat = Rat { num: 1, den: 1 };

    pub fn new(num: i64, den: i64) -> Rat {
        assert!(den != 0, "zero denominator");
        Self::normalized(num as i128, den as i128)
    }

    pub fn from_int(n: i64) -> Rat {
        Rat { num: n, den: 1 }
    }

    fn normalized(num: i128, den: i128) -> Rat {
        let sign = if den < 0 { -1 } else { 1 };
        let g = gcd(num, den).max(1);
        let num = sign * num / g;
        let den = sign * den / g;
        Rat {
            num: i64::try_from(num).expect("rational numerator overflow"),
            den: i64::try_from(den).expect("rational denominator overflow"),
        }
    }

    pub fn numer(&self) -> i64 {
        self.num
    }

    pub fn denom(&self) -> i64 {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    pub fn signum(&self) -> i32 {
        self.num.signum() as i32
    }

    pub fn recip(&self) -> Rat {
        assert!(self.num != 0, "division by zero");
        Self::normalized(self.den as i128, self.num as i128)
    }
}

impl Add for Rat {
    type Output = Rat;
    fn add(self, rhs: Rat) -> Rat {
        Rat::normalized(
            self.num as i128 * rhs.den as i128 + rhs.num as i128 * self.den as i128,
            self.den as i128 * rhs.den as i128,
        )
    }
}

impl Sub for Rat {
    type Output = Rat;
    fn sub(self, rhs: Rat) -> Rat {
        self + (-rhs)
    }
}

impl Mul for Rat {
    type Output = Rat;
    fn mul(self, rhs: Rat) -> Rat {
        Rat::normalized(
            self.num as i128 * rhs.num as i128,
            self.den as i128 * rhs.den as i128,
        )
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat {
            num: -self.num,
            den: self.den,
        }
    }
}

impl PartialOrd for Rat {
    fn partial_cmp(&self, other: &Rat) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rat {
    fn cmp(&self, other: &Rat) -> Ordering {
        (self.num as i128 * other.den as i128).cmp(&(other.num as i128 * self.den as i128))
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// Element of Q(sqrt 5): `a + b*sqrt(5)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Scalar {
    pub a: Rat,
    pub b: Rat,
}

impl Scalar {
    pub const ZERO: Scalar = Scalar {
        a: Rat::ZERO,
        b: Rat::ZERO,
    };
    pub const ONE: Scalar = Scalar {
        a: Rat::ONE,
        b: Rat::ZERO,
    };

    pub fn from_int(n: i64) -> Scalar {
        Scalar {
            a: Rat::from_int(n),
            b: Rat::ZERO,
        }
    }

    pub fn from_rat(a: Rat) -> Scalar {
        Scalar { a, b: Rat::ZERO }
    }

    /// The golden ratio `(1 + sqrt 5)/2`.
    pub fn golden() -> Scalar {
        Scalar {
            a: Rat::new(1, 2),
            b: Rat::new(1, 2),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Exact sign of `a + b*sqrt(5)`.
    pub fn signum(&self) -> i32 {
        let (sa, sb) = (self.a.signum(), self.b.signum());
        if sb == 0 {
            return sa;
        }
        if sa == 0 {
            return sb;
        }
        if sa == sb {
            return sa;
        }
        // opposite signs: compare a^2 with 5 b^2
        let a2 = self.a * self.a;
        let b25 = self.b * self.b * Rat::from_int(5);
        match a2.cmp(&b25) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => 0,
        }
    }

    pub fn recip(&self) -> Scalar {
        // conjugate over the norm a^2 - 5 b^2
        let norm = self.a * self.a - self.b * self.b * Rat::from_int(5);
        assert!(!norm.is_zero(), "division by zero scalar");
        let inv = norm.recip();
        Scalar {
            a: self.a * inv,
            b: -self.b * inv,
        }
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        Scalar {
            a: self.a + rhs.a,
            b: self.b + rhs.b,
        }
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        Scalar {
            a: self.a - rhs.a,
            b: self.b - rhs.b,
        }
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        // (a + b s)(c + d s) = ac + 5bd + (ad + bc) s
        Scalar {
            a: self.a * rhs.a + Rat::from_int(5) * (self.b * rhs.b),
            b: self.a * rhs.b + self.b * rhs.a,
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            a: -self.a,
            b: -self.b,
        }
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Scalar) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Scalar {
    fn cmp(&self, other: &Scalar) -> Ordering {
        match (*self - *other).signum() {
            s if s < 0 => Ordering::Less,
            0 => Ordering::Equal,
            _ => Ordering::Greater,
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{:?}", self.a)
        } else {
            write!(f, "{:?}+{:?}r5", self.a, self.b)
        }
    }
}
