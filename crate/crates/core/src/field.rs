//! Coefficient fields.
//!
//! Every engine in this crate is generic over [`Field`]. Two families are
//! provided: arbitrary precision rationals ([`Rational`]) and prime fields
//! with a compile-time modulus ([`Fp`]).

use std::fmt::{self, Debug, Display};
use std::hash::Hash;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

/// Exact field arithmetic.
pub trait Field:
    Clone
    + Debug
    + Display
    + PartialEq
    + Eq
    + Hash
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + AddAssign
    + SubAssign
    + MulAssign
{
    /// 0 for the rationals, `p` for `F_p`.
    const CHARACTERISTIC: u64;

    /// Multiplicative inverse; `None` for zero.
    fn inv(&self) -> Option<Self>;

    fn from_i64(v: i64) -> Self;

    /// `num / den` reduced into the field; `None` when `den` vanishes.
    fn from_ratio(num: &BigInt, den: &BigInt) -> Option<Self>;

    /// Coefficient used for seeded general elements: `{-5..5}` over the
    /// rationals, uniform over a prime field.
    fn sample<R: Rng + ?Sized>(rng: &mut R) -> Self;

    /// True when the printed form needs parentheses or a leading sign.
    fn is_negative(&self) -> bool;

    /// Returns `true` iff the element is a (signed) integer in printed form,
    /// i.e. prints without a `/`.
    fn is_integral(&self) -> bool {
        true
    }
}

/// Rational numbers, always gcd-reduced with positive denominator.
pub type Rational = BigRational;

impl Field for BigRational {
    const CHARACTERISTIC: u64 = 0;

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn from_ratio(num: &BigInt, den: &BigInt) -> Option<Self> {
        if den.is_zero() {
            None
        } else {
            Some(BigRational::new(num.clone(), den.clone()))
        }
    }

    fn sample<R: Rng + ?Sized>(rng: &mut R) -> Self {
        Self::from_i64(rng.gen_range(-5..=5))
    }

    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }

    fn is_integral(&self) -> bool {
        self.denom().is_one()
    }
}

/// Element of the prime field `F_P`, stored as its canonical residue.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Fp<const P: u32>(u32);

impl<const P: u32> Fp<P> {
    pub const MODULUS: u32 = P;

    pub fn new(v: i64) -> Self {
        Fp(v.rem_euclid(P as i64) as u32)
    }

    pub fn residue(self) -> u32 {
        self.0
    }

    /// Symmetric representative in `(-P/2, P/2]`.
    pub fn signed(self) -> i64 {
        let v = self.0 as i64;
        if v > (P as i64) / 2 {
            v - P as i64
        } else {
            v
        }
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Fp::<P>(1 % P);
        while e > 0 {
            if e & 1 == 1 {
                acc *= base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }
}

impl<const P: u32> Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.signed())
    }
}

impl<const P: u32> Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.signed())
    }
}

impl<const P: u32> Zero for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u32> One for Fp<P> {
    fn one() -> Self {
        Fp(1 % P)
    }
}

impl<const P: u32> Add for Fp<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let s = self.0 as u64 + rhs.0 as u64;
        Fp((s % P as u64) as u32)
    }
}

impl<const P: u32> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        let s = self.0 as u64 + P as u64 - rhs.0 as u64;
        Fp((s % P as u64) as u32)
    }
}

impl<const P: u32> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Fp(((self.0 as u64 * rhs.0 as u64) % P as u64) as u32)
    }
}

impl<const P: u32> Div for Fp<P> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        self * rhs.inv().expect("division by zero in F_p")
    }
}

impl<const P: u32> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        if self.0 == 0 {
            self
        } else {
            Fp(P - self.0)
        }
    }
}

impl<const P: u32> AddAssign for Fp<P> {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl<const P: u32> SubAssign for Fp<P> {
    fn sub_assign(&mut self, rhs: Self) {
        *self = *self - rhs;
    }
}

impl<const P: u32> MulAssign for Fp<P> {
    fn mul_assign(&mut self, rhs: Self) {
        *self = *self * rhs;
    }
}

impl<const P: u32> Field for Fp<P> {
    const CHARACTERISTIC: u64 = P as u64;

    fn inv(&self) -> Option<Self> {
        if self.0 == 0 {
            None
        } else {
            // Fermat; P is prime.
            Some(self.pow(P as u64 - 2))
        }
    }

    fn from_i64(v: i64) -> Self {
        Fp::new(v)
    }

    fn from_ratio(num: &BigInt, den: &BigInt) -> Option<Self> {
        let p = BigInt::from(P);
        let n = num.mod_floor(&p).to_i64()?;
        let d = den.mod_floor(&p).to_i64()?;
        let d = Fp::<P>::new(d).inv()?;
        Some(Fp::<P>::new(n) * d)
    }

    fn sample<R: Rng + ?Sized>(rng: &mut R) -> Self {
        Fp(rng.gen_range(0..P))
    }

    fn is_negative(&self) -> bool {
        self.signed() < 0
    }
}

/// Deterministic trial-division primality test for `u64` inputs up to 2^32.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}
