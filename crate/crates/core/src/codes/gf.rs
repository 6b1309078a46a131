use crate::error::{Error, Result};

/// `GF(2^b)` for `b` in 1..=3, elements as bit-polynomials `0..q`.
///
/// Moduli: `x^2+x+1` for `q = 4`, `x^3+x+1` for `q = 8`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Gf {
    q: u8,
    modulus: u8,
}

impl Gf {
    pub fn new(q: u32) -> Result<Self> {
        let modulus = match q {
            2 => 0b11,
            4 => 0b111,
            8 => 0b1011,
            _ => return Err(Error::Field(format!("unsupported field size {q}"))),
        };
        Ok(Gf { q: q as u8, modulus })
    }

    pub fn binary() -> Self {
        Gf { q: 2, modulus: 0b11 }
    }

    pub fn q(&self) -> u32 {
        self.q as u32
    }

    /// Extension degree `b` with `q = 2^b`.
    pub fn degree(&self) -> u32 {
        self.q.trailing_zeros()
    }

    pub fn add(&self, a: u8, b: u8) -> u8 {
        a ^ b
    }

    pub fn mul(&self, a: u8, b: u8) -> u8 {
        let deg = self.degree();
        let mut acc = 0u8;
        let mut a = a;
        for i in 0..deg {
            if b >> i & 1 == 1 {
                acc ^= a;
            }
            a <<= 1;
            if a >> deg & 1 == 1 {
                a ^= self.modulus;
            }
        }
        acc
    }

    pub fn inv(&self, a: u8) -> Option<u8> {
        (1..self.q).find(|&x| self.mul(a, x) == 1)
    }

    pub fn contains(&self, a: u8) -> bool {
        a < self.q
    }
}
