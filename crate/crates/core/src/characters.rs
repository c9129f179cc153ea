//! The unit group `(ℤ/qℤ)^×` as an explicit product of cyclic blocks, and
//! Dirichlet characters mod q as exponent vectors against those blocks.
//!
//! The decomposition follows the CRT over the prime powers of q: an odd
//! prime power p^e contributes one cyclic block of order φ(p^e) generated by
//! the smallest primitive root mod p^e; the factor 2 contributes nothing;
//! 4 contributes a block of order 2; and 2^e with e ≥ 3 contributes the two
//! blocks ⟨−1⟩ of order 2 and ⟨5⟩ of order 2^{e−2}, in that order.
//!
//! Character values are kept exact as [`TurnFraction`]s (reduced fractions
//! of a full turn); complex doubles enter only when sums are accumulated in
//! [`crate::charsums`]. Conductors are computed by the definitional test —
//! the smallest divisor d | q on which the character is constant across
//! residue classes mod d — and cross-checked in the tests against the
//! block-exponent criterion.

use std::fmt;

use num_complex::Complex64;
use num_integer::{gcd, lcm};
use thiserror::Error;

use crate::arith::{factorize, mod_inverse, pow_mod};

/// Largest modulus accepted by [`UnitGroup::new`]; the per-block discrete-log
/// tables take O(q) memory in total.
pub const MODULUS_LIMIT: u64 = 10_000_000;

/// Sentinel in the discrete-log tables marking residues not coprime to the
/// block's prime power.
const NOT_A_UNIT: u32 = u32::MAX;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CharacterError {
    #[error("modulus must be positive")]
    ZeroModulus,
    #[error("modulus {q} exceeds the table limit {limit}")]
    ModulusTooLarge { q: u64, limit: u64 },
    #[error("expected {expected} exponents, got {got}")]
    WrongExponentCount { expected: usize, got: usize },
    #[error("exponent {exponent} at position {position} must be below the block order {order}")]
    ExponentTooLarge { position: usize, exponent: u64, order: u64 },
    #[error("{d} does not divide {q}")]
    NotADivisor { d: u64, q: u64 },
    #[error("cannot restrict to modulus {d}: the conductor is {conductor}")]
    ConductorTooLarge { conductor: u64, d: u64 },
}

/// A root of unity as the reduced fraction `num/den` of a full turn,
/// denoting `exp(2πi·num/den)`; `0 ≤ num < den`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TurnFraction {
    num: u64,
    den: u64,
}

impl TurnFraction {
    /// The value 1 (zero turns).
    pub const ONE: TurnFraction = TurnFraction { num: 0, den: 1 };

    /// Reduce `num/den` into canonical form. `den` must be positive.
    pub fn new(num: u64, den: u64) -> TurnFraction {
        assert!(den > 0, "turn fraction denominator must be positive");
        let num = num % den;
        let g = gcd(num, den);
        TurnFraction { num: num / g, den: den / g }
    }

    pub fn num(self) -> u64 {
        self.num
    }

    pub fn den(self) -> u64 {
        self.den
    }

    pub fn is_one(self) -> bool {
        self.num == 0
    }

    /// Complex conjugate (negated turn).
    pub fn conj(self) -> TurnFraction {
        TurnFraction::new(self.den - self.num, self.den)
    }

    /// Product of the two roots of unity (sum of turns).
    pub fn mul(self, other: TurnFraction) -> TurnFraction {
        let den = (self.den as u128) * (other.den as u128);
        let num = (self.num as u128) * (other.den as u128)
            + (other.num as u128) * (self.den as u128);
        let g = gcd(num, den);
        TurnFraction::new((num / g) as u64, (den / g) as u64)
    }

    /// k-th power (k-fold turn).
    pub fn pow(self, k: u64) -> TurnFraction {
        let num = ((self.num as u128 * k as u128) % self.den as u128) as u64;
        TurnFraction::new(num, self.den)
    }

    /// Render as a complex double; exact for denominators 1, 2, and 4 so
    /// that sums of characters of order ≤ 4 cancel without rounding.
    pub fn to_complex(self) -> Complex64 {
        match (self.num, self.den) {
            (0, 1) => Complex64::new(1.0, 0.0),
            (1, 2) => Complex64::new(-1.0, 0.0),
            (1, 4) => Complex64::new(0.0, 1.0),
            (3, 4) => Complex64::new(0.0, -1.0),
            (num, den) => {
                let angle = std::f64::consts::TAU * (num as f64) / (den as f64);
                let (sin, cos) = angle.sin_cos();
                Complex64::new(cos, sin)
            }
        }
    }
}

impl fmt::Display for TurnFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// Decide `Σ exp(2πi·fᵢ) = 0` exactly when every reduced denominator
/// divides 3 or 4 (covers characters of order ≤ 4). Vanishing sums of
/// m-th roots of unity for m ∈ {1, 2, 3, 4} are characterized by counting:
/// opposite roots must pair off (m = 2, 4) and the three cube roots must
/// appear equally often (m = 3). Returns `None` for other denominators;
/// callers fall back to complex accumulation with a tolerance.
pub fn turn_sum_cancels_exactly(values: &[TurnFraction]) -> Option<bool> {
    // The lcm of the denominators lands in {1, 2, 3, 4} exactly for the
    // supported families; any mix of 3 with 2 or 4 pushes it past 4.
    let mut l: u64 = 1;
    for v in values {
        l = lcm(l, v.den());
        if l > 4 {
            return None;
        }
    }
    let mut counts = [0u64; 4];
    for v in values {
        counts[(v.num() * (l / v.den())) as usize] += 1;
    }
    Some(match l {
        1 => values.is_empty(),
        2 => counts[0] == counts[1],
        3 => counts[0] == counts[1] && counts[1] == counts[2],
        4 => counts[0] == counts[2] && counts[1] == counts[3],
        _ => unreachable!(),
    })
}

/// One cyclic factor of `(ℤ/qℤ)^×`.
#[derive(Debug)]
struct Block {
    /// The prime power this block reduces through (2^e appears twice when
    /// e ≥ 3: once for ⟨−1⟩ and once for ⟨5⟩).
    prime_power: u64,
    /// Generator lifted to mod q: ≡ the local generator mod `prime_power`,
    /// ≡ 1 mod `q/prime_power`.
    generator: u64,
    order: u64,
    /// Discrete log of each residue mod `prime_power` with respect to the
    /// local generator; `NOT_A_UNIT` off the units.
    dlog: Vec<u32>,
}

/// `(ℤ/qℤ)^×` with per-block discrete-log tables; immutable after
/// construction and shareable across threads.
#[derive(Debug)]
pub struct UnitGroup {
    q: u64,
    phi: u64,
    /// lcm of the block orders (the Carmichael function λ(q)).
    exponent: u64,
    blocks: Vec<Block>,
    /// True when q ≡ 2 (mod 4): the factor 2 contributes no block, so even
    /// residues must be rejected explicitly.
    reject_even: bool,
}

impl UnitGroup {
    /// Build the group for `1 ≤ q ≤ 10^7`.
    pub fn new(q: u64) -> Result<UnitGroup, CharacterError> {
        if q == 0 {
            return Err(CharacterError::ZeroModulus);
        }
        if q > MODULUS_LIMIT {
            return Err(CharacterError::ModulusTooLarge { q, limit: MODULUS_LIMIT });
        }
        let mut blocks = Vec::new();
        let mut reject_even = false;
        for &(p, e) in factorize(q).factors() {
            if p == 2 {
                match e {
                    1 => reject_even = true,
                    2 => {
                        let mut dlog = vec![NOT_A_UNIT; 4];
                        dlog[1] = 0;
                        dlog[3] = 1;
                        blocks.push(Block {
                            prime_power: 4,
                            generator: lift_generator(3, 4, q),
                            order: 2,
                            dlog,
                        });
                    }
                    _ => {
                        let pe = 1u64 << e;
                        let half_order = pe / 4; // 2^{e−2}
                        let mut dlog_sign = vec![NOT_A_UNIT; pe as usize];
                        let mut dlog_five = vec![NOT_A_UNIT; pe as usize];
                        let mut x = 1u64;
                        for b in 0..half_order {
                            dlog_sign[x as usize] = 0;
                            dlog_five[x as usize] = b as u32;
                            dlog_sign[(pe - x) as usize] = 1;
                            dlog_five[(pe - x) as usize] = b as u32;
                            x = x * 5 % pe;
                        }
                        blocks.push(Block {
                            prime_power: pe,
                            generator: lift_generator(pe - 1, pe, q),
                            order: 2,
                            dlog: dlog_sign,
                        });
                        blocks.push(Block {
                            prime_power: pe,
                            generator: lift_generator(5, pe, q),
                            order: half_order,
                            dlog: dlog_five,
                        });
                    }
                }
            } else {
                let pe = p.pow(e);
                let order = pe / p * (p - 1); // φ(p^e)
                let g = smallest_primitive_root(p, pe, order);
                let mut dlog = vec![NOT_A_UNIT; pe as usize];
                let mut x = 1u64;
                for k in 0..order {
                    dlog[x as usize] = k as u32;
                    x = x * g % pe;
                }
                blocks.push(Block { prime_power: pe, generator: lift_generator(g, pe, q), order, dlog });
            }
        }
        let phi = blocks.iter().map(|b| b.order).product();
        let exponent = blocks.iter().fold(1, |l, b| lcm(l, b.order));
        Ok(UnitGroup { q, phi, exponent, blocks, reject_even })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// φ(q), the number of characters.
    pub fn phi(&self) -> u64 {
        self.phi
    }

    /// λ(q), the lcm of the block orders; every character value is a
    /// `λ(q)`-th root of unity.
    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    /// Orders of the cyclic blocks, in decomposition order.
    pub fn block_orders(&self) -> Vec<u64> {
        self.blocks.iter().map(|b| b.order).collect()
    }

    /// Generators of the cyclic blocks, lifted to residues mod q.
    pub fn generators(&self) -> Vec<u64> {
        self.blocks.iter().map(|b| b.generator).collect()
    }

    pub fn is_unit(&self, n: u64) -> bool {
        if self.q == 1 {
            return true;
        }
        let n = n % self.q;
        if self.reject_even && n % 2 == 0 {
            return false;
        }
        self.blocks
            .iter()
            .all(|b| b.dlog[(n % b.prime_power) as usize] != NOT_A_UNIT)
    }

    /// The exponent vector of a unit with respect to the block generators,
    /// or `None` when `gcd(n, q) > 1`.
    pub fn dlog_vector(&self, n: u64) -> Option<Vec<u64>> {
        if self.q == 1 {
            return Some(Vec::new());
        }
        let n = n % self.q;
        if self.reject_even && n % 2 == 0 {
            return None;
        }
        let mut out = Vec::with_capacity(self.blocks.len());
        for b in &self.blocks {
            let d = b.dlog[(n % b.prime_power) as usize];
            if d == NOT_A_UNIT {
                return None;
            }
            out.push(d as u64);
        }
        Some(out)
    }

    /// The character with the given enumeration index (the exponent vector
    /// read as a mixed-radix number, last block fastest); index 0 is the
    /// principal character.
    pub fn character(&self, index: u64) -> Character {
        assert!(index < self.phi, "character index {index} out of range (φ = {})", self.phi);
        let mut exponents = vec![0u64; self.blocks.len()];
        let mut rem = index;
        for (i, b) in self.blocks.iter().enumerate().rev() {
            exponents[i] = rem % b.order;
            rem /= b.order;
        }
        self.finish_character(exponents)
    }

    /// Build a character from its exponent vector against the block orders.
    pub fn character_from_exponents(
        &self,
        exponents: Vec<u64>,
    ) -> Result<Character, CharacterError> {
        if exponents.len() != self.blocks.len() {
            return Err(CharacterError::WrongExponentCount {
                expected: self.blocks.len(),
                got: exponents.len(),
            });
        }
        for (position, (&exponent, b)) in exponents.iter().zip(&self.blocks).enumerate() {
            if exponent >= b.order {
                return Err(CharacterError::ExponentTooLarge {
                    position,
                    exponent,
                    order: b.order,
                });
            }
        }
        Ok(self.finish_character(exponents))
    }

    /// All φ(q) characters in index order (principal first).
    pub fn characters(&self) -> impl Iterator<Item = Character> + '_ {
        (0..self.phi).map(|i| self.character(i))
    }

    /// The character mod q induced by `chi` mod d (where d | q): equal to
    /// `chi` on units mod q, zero elsewhere. The conductor is unchanged.
    pub fn induced_from(
        &self,
        from: &UnitGroup,
        chi: &Character,
    ) -> Result<Character, CharacterError> {
        assert_eq!(chi.q, from.q, "character belongs to a different group");
        if self.q % from.q != 0 {
            return Err(CharacterError::NotADivisor { d: from.q, q: self.q });
        }
        let mut exponents = Vec::with_capacity(self.blocks.len());
        for b in &self.blocks {
            // χ(g)^{ord g} = χ(g^{ord g}) = χ(1), so the value's denominator
            // divides the block order and the division below is exact.
            let v = chi
                .eval(from, b.generator)
                .expect("block generators are units mod q, hence mod d");
            debug_assert_eq!(b.order % v.den(), 0);
            exponents.push(v.num() * (b.order / v.den()) % b.order);
        }
        Ok(self.finish_character(exponents))
    }

    fn finish_character(&self, exponents: Vec<u64>) -> Character {
        let order = self
            .blocks
            .iter()
            .zip(&exponents)
            .fold(1, |l, (b, &e)| lcm(l, b.order / gcd(b.order, e)));
        let conductor = self.conductor_of(&exponents);
        Character { q: self.q, exponents, order, conductor }
    }

    /// Smallest d | q such that the character is constant on residue
    /// classes mod d intersected with the units mod q — equivalently
    /// (divide any two units in a common class) trivial on every unit
    /// u ≡ 1 (mod d).
    fn conductor_of(&self, exponents: &[u64]) -> u64 {
        for d in factorize(self.q).divisors() {
            let mut trivial = true;
            let mut u = 1 + d;
            while u < self.q {
                if let Some(v) = self.eval_exponents(exponents, u) {
                    if !v.is_one() {
                        trivial = false;
                        break;
                    }
                }
                u += d;
            }
            if trivial {
                return d;
            }
        }
        self.q
    }

    fn eval_exponents(&self, exponents: &[u64], n: u64) -> Option<TurnFraction> {
        if self.q == 1 {
            return Some(TurnFraction::ONE);
        }
        let n = n % self.q;
        if self.reject_even && n % 2 == 0 {
            return None;
        }
        let l = self.exponent;
        let mut turn = 0u64;
        for (b, &e) in self.blocks.iter().zip(exponents) {
            let d = b.dlog[(n % b.prime_power) as usize];
            if d == NOT_A_UNIT {
                return None;
            }
            let local = (e as u128 * d as u128 % b.order as u128) as u64;
            turn = (turn + local * (l / b.order)) % l;
        }
        Some(TurnFraction::new(turn, l))
    }
}

/// Smallest primitive root mod the odd prime power `pe = p^e` with
/// `order = φ(p^e)`.
fn smallest_primitive_root(p: u64, pe: u64, order: u64) -> u64 {
    let mut prime_factors: Vec<u64> =
        factorize(p - 1).factors().iter().map(|&(f, _)| f).collect();
    if pe > p {
        prime_factors.push(p);
    }
    let mut g = 2;
    loop {
        debug_assert!(g < pe, "no primitive root below {pe}");
        if g % p != 0 && prime_factors.iter().all(|&f| pow_mod(g, order / f, pe) != 1) {
            return g;
        }
        g += 1;
    }
}

/// CRT-lift `g` mod `pe` to the residue mod q that is ≡ g (mod pe) and
/// ≡ 1 (mod q/pe).
fn lift_generator(g: u64, pe: u64, q: u64) -> u64 {
    let m = q / pe;
    if m == 1 {
        return g % pe;
    }
    // Solve 1 + m·t ≡ g (mod pe) for t; gcd(m, pe) = 1.
    let m_inv = mod_inverse(m % pe, pe);
    let t = (g + pe - 1) % pe * m_inv % pe;
    let lifted = (1 + m as u128 * t as u128) as u64;
    debug_assert_eq!(lifted % pe, g % pe);
    debug_assert_eq!(lifted % m, 1);
    lifted
}

/// A Dirichlet character mod q, stored as its exponent vector against the
/// blocks of the corresponding [`UnitGroup`]; order and conductor are fixed
/// at construction. All evaluation methods take the group the character was
/// built from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    q: u64,
    exponents: Vec<u64>,
    order: u64,
    conductor: u64,
}

impl Character {
    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }

    /// Multiplicative order: the smallest m ≥ 1 with χ^m principal.
    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn is_principal(&self) -> bool {
        self.conductor == 1
    }

    pub fn is_primitive(&self) -> bool {
        self.conductor == self.q
    }

    /// The enumeration index of this character within its group.
    pub fn index(&self, group: &UnitGroup) -> u64 {
        assert_eq!(self.q, group.q, "character belongs to a different group");
        group
            .blocks
            .iter()
            .zip(&self.exponents)
            .fold(0, |acc, (b, &e)| acc * b.order + e)
    }

    /// χ(n) as an exact root of unity, or `None` when `gcd(n, q) > 1`.
    pub fn eval(&self, group: &UnitGroup, n: u64) -> Option<TurnFraction> {
        assert_eq!(self.q, group.q, "character belongs to a different group");
        group.eval_exponents(&self.exponents, n)
    }

    /// χ(n) as a complex double (zero off the units).
    pub fn value(&self, group: &UnitGroup, n: u64) -> Complex64 {
        self.eval(group, n)
            .map_or(Complex64::new(0.0, 0.0), TurnFraction::to_complex)
    }

    /// The character mod `to.q()` (a divisor of q, itself a multiple of the
    /// conductor) through which this character factors: the unique ψ with
    /// ψ(n) = χ(n) on units mod q. Restricting to the conductor itself
    /// yields the primitive character inducing χ.
    pub fn restrict_to(
        &self,
        group: &UnitGroup,
        to: &UnitGroup,
    ) -> Result<Character, CharacterError> {
        assert_eq!(self.q, group.q, "character belongs to a different group");
        if self.q % to.q != 0 {
            return Err(CharacterError::NotADivisor { d: to.q, q: self.q });
        }
        if to.q % self.conductor != 0 {
            return Err(CharacterError::ConductorTooLarge {
                conductor: self.conductor,
                d: to.q,
            });
        }
        let mut exponents = Vec::with_capacity(to.blocks.len());
        for b in &to.blocks {
            // Lift the block generator to a unit mod q in the same class
            // mod d; χ is constant on that class since conductor | d.
            let mut lift = b.generator;
            while !group.is_unit(lift) {
                lift += to.q;
                debug_assert!(lift < self.q + to.q, "no coprime lift found");
            }
            let v = self.eval(group, lift).expect("lift is a unit");
            debug_assert_eq!(b.order % v.den(), 0);
            exponents.push(v.num() * (b.order / v.den()) % b.order);
        }
        Ok(to.finish_character(exponents))
    }
}
