//! Polynomials over GF(2) and linear feedback shift registers.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::seq::CyclicSequence;

/// Largest degree accepted by the period-based primitivity test.
pub const MAX_PRIMITIVE_DEGREE: usize = 24;

/// Polynomial over GF(2); bit `i` of `coeffs` is the coefficient of `x^i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gf2Poly {
    coeffs: u64,
}

impl Gf2Poly {
    pub fn new(coeffs: u64) -> Result<Self> {
        if coeffs == 0 {
            return Err(Error::MalformedPolynomial("zero polynomial".into()));
        }
        Ok(Self { coeffs })
    }

    /// `sum x^e` over the given exponents.
    pub fn from_exponents(exps: &[usize]) -> Result<Self> {
        let mut coeffs = 0u64;
        for &e in exps {
            if e >= 64 {
                return Err(Error::MalformedPolynomial(format!("exponent {e} exceeds 63")));
            }
            coeffs ^= 1 << e;
        }
        Self::new(coeffs)
    }

    pub fn coeffs(self) -> u64 {
        self.coeffs
    }

    pub fn degree(self) -> usize {
        63 - self.coeffs.leading_zeros() as usize
    }

    pub fn coeff(self, i: usize) -> u8 {
        (i < 64 && self.coeffs >> i & 1 == 1) as u8
    }

    /// Number of nonzero coefficients among `c_1 .. c_n`.
    pub fn feedback_weight(self) -> u32 {
        (self.coeffs >> 1).count_ones()
    }

    /// `x^n c(1/x)`.
    pub fn reciprocal(self) -> Self {
        let n = self.degree();
        let rev = self.coeffs.reverse_bits() >> (63 - n);
        Self { coeffs: rev }
    }

    fn check_feedback(self) -> Result<usize> {
        let n = self.degree();
        if n == 0 || self.coeffs & 1 == 0 {
            return Err(Error::MalformedPolynomial(format!(
                "{self} needs nonzero constant and leading coefficients"
            )));
        }
        Ok(n)
    }

    // Tap mask over the shift-register state: bit `i - 1` holds `c_i`.
    fn taps(self) -> u32 {
        (self.coeffs >> 1) as u32
    }
}

impl fmt::Display for Gf2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = (0..=self.degree())
            .rev()
            .filter(|&i| self.coeff(i) == 1)
            .map(|i| match i {
                0 => "1".to_string(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            })
            .collect();
        f.write_str(&terms.join("+"))
    }
}

impl fmt::Debug for Gf2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gf2Poly({self})")
    }
}

/// Accepts `x^7+x^6+1` style sums, or a coefficient string `c_0 c_1 .. c_n`.
impl FromStr for Gf2Poly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::MalformedPolynomial(format!("cannot parse {s:?}"));
        if s.is_empty() {
            return Err(bad());
        }
        if s.chars().all(|c| c == '0' || c == '1') {
            if s.len() > 64 {
                return Err(bad());
            }
            let coeffs = s.bytes().enumerate().fold(0u64, |acc, (i, c)| acc | ((c - b'0') as u64) << i);
            return Self::new(coeffs);
        }
        let mut exps = Vec::new();
        for term in s.split('+') {
            let e = match term {
                "1" => 0,
                "x" => 1,
                t => t.strip_prefix("x^").and_then(|e| e.parse().ok()).ok_or_else(bad)?,
            };
            exps.push(e);
        }
        Self::from_exponents(&exps)
    }
}

/// Period of the recurrence `a_k = sum c_i a_{k-i}` from the state `0..01`.
fn lfsr_period(p: Gf2Poly, n: usize) -> u64 {
    let mask = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let taps = p.taps();
    let start = 1u32;
    let mut state = start;
    let mut steps = 0u64;
    loop {
        let next = (state & taps).count_ones() & 1;
        state = ((state << 1) | next) & mask;
        steps += 1;
        if state == start || steps > 1 << n {
            return steps;
        }
    }
}

/// Whether `p` is primitive, by measuring the period of its shift register.
pub fn is_primitive(p: Gf2Poly) -> Result<bool> {
    let n = p.check_feedback()?;
    if n > MAX_PRIMITIVE_DEGREE {
        return Err(Error::ResourceLimit(format!(
            "primitivity test limited to degree {MAX_PRIMITIVE_DEGREE}"
        )));
    }
    Ok(lfsr_period(p, n) == (1 << n) - 1)
}

/// Numerically least primitive polynomial of degree `n`.
pub fn least_primitive(n: usize) -> Result<Gf2Poly> {
    if n == 0 || n > MAX_PRIMITIVE_DEGREE {
        return Err(Error::Unsupported(format!("degree {n}")));
    }
    let base = (1u64 << n) | 1;
    (0..1u64 << (n - 1))
        .map(|mid| Gf2Poly { coeffs: base | mid << 1 })
        .find(|&p| is_primitive(p).unwrap_or(false))
        .ok_or_else(|| Error::Unsupported(format!("no primitive polynomial of degree {n}")))
}

/// Lexicographically least (reading `c_1 c_2 .. c_{n-1}`) primitive polynomial
/// of degree `n` with `c_1 = .. = c_{2R+1} = 0`.
pub fn find_sparse_primitive(n: usize, radius: usize) -> Result<Option<Gf2Poly>> {
    if n > MAX_PRIMITIVE_DEGREE {
        return Err(Error::ResourceLimit(format!(
            "primitivity test limited to degree {MAX_PRIMITIVE_DEGREE}"
        )));
    }
    let zeros = 2 * radius + 1;
    if n < 2 || zeros >= n {
        return Ok(None);
    }
    // free coefficients c_{zeros+1} .. c_{n-1}, with c_{zeros+1} most significant
    let free = n - 1 - zeros;
    for v in 0..1u64 << free {
        let mut coeffs = (1u64 << n) | 1;
        for j in 0..free {
            if v >> (free - 1 - j) & 1 == 1 {
                coeffs |= 1 << (zeros + 1 + j);
            }
        }
        let p = Gf2Poly { coeffs };
        if is_primitive(p)? {
            return Ok(Some(p));
        }
    }
    Ok(None)
}

/// Bit stream of `a_k = sum c_i a_{k-i} + offset`, starting with the initial state.
#[derive(Clone, Debug)]
pub struct LfsrStream {
    poly: Gf2Poly,
    offset: u8,
    degree: usize,
    state: u32,
    initial: Vec<u8>,
    emitted: usize,
}

impl LfsrStream {
    /// `initial` holds `a_0 .. a_{n-1}`.
    pub fn new(poly: Gf2Poly, offset: u8, initial: &[u8]) -> Result<Self> {
        let degree = poly.check_feedback()?;
        if degree > 32 {
            return Err(Error::UnsupportedWindowWidth(degree));
        }
        if initial.len() != degree || initial.iter().any(|&b| b > 1) {
            return Err(Error::Parameter(format!("initial state must be {degree} bits")));
        }
        Ok(Self { poly, offset: offset & 1, degree, state: 0, initial: initial.to_vec(), emitted: 0 })
    }

    pub fn poly(&self) -> Gf2Poly {
        self.poly
    }

    pub fn offset(&self) -> u8 {
        self.offset
    }

    /// The most recent `n` outputs, oldest first, as an `n`-bit value (state bit 0 is the latest).
    pub fn state(&self) -> u32 {
        self.state
    }
}

impl Iterator for LfsrStream {
    type Item = u8;

    fn next(&mut self) -> Option<u8> {
        let bit = if self.emitted < self.degree {
            self.initial[self.emitted]
        } else {
            (((self.state & self.poly.taps()).count_ones() & 1) as u8) ^ self.offset
        };
        self.state = (self.state << 1) | bit as u32;
        if self.degree < 32 {
            self.state &= (1 << self.degree) - 1;
        }
        self.emitted += 1;
        Some(bit)
    }
}

/// One period of the M-sequence of a primitive `p`, started from `1 0 .. 0`.
pub fn m_sequence(p: Gf2Poly) -> Result<CyclicSequence> {
    if !is_primitive(p)? {
        return Err(Error::Parameter(format!("{p} is not primitive")));
    }
    let n = p.degree();
    let mut init = vec![0u8; n];
    init[0] = 1;
    let bits: Vec<u8> = LfsrStream::new(p, 0, &init)?.take((1 << n) - 1).collect();
    CyclicSequence::from_bits(&bits)
}
