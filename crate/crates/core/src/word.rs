//! Generator words in `U = [[1,1],[0,1]]` and `L = [[1,0],[1,1]]` and their
//! descending partial products.

use alloc::vec::Vec;
use core::fmt;
use core::ops::Mul;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::ContinuedFraction;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Generator {
    /// `[[1,1],[0,1]]`
    U,
    /// `[[1,0],[1,1]]`
    L,
}

impl Generator {
    pub fn matrix(self) -> Mat2 {
        match self {
            Generator::U => Mat2::new(1, 1, 0, 1),
            Generator::L => Mat2::new(1, 0, 1, 1),
        }
    }

    fn flip(self) -> Generator {
        match self {
            Generator::U => Generator::L,
            Generator::L => Generator::U,
        }
    }
}

/// The letters `A_i` for `i = -n1 ..= N`.
///
/// The last block of the expansion would end with one more letter, at
/// index `N + 1`; it corresponds to no cabling and is not stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorWord {
    start_index: BigInt,
    leading: usize,
    letters: Vec<Generator>,
}

impl GeneratorWord {
    /// Always `-n1`.
    pub fn start_index(&self) -> &BigInt {
        &self.start_index
    }

    /// All letters, starting at index `-n1`.
    pub fn letters(&self) -> &[Generator] {
        &self.letters
    }

    /// `N`, the index of the last stored letter.
    pub fn top_index(&self) -> usize {
        self.letters.len() - self.leading - 1
    }

    /// The letter `A_i`, if `-n1 <= i <= N`.
    pub fn letter(&self, i: isize) -> Option<Generator> {
        let offset = i.checked_add(isize::try_from(self.leading).ok()?)?;
        usize::try_from(offset)
            .ok()
            .and_then(|o| self.letters.get(o).copied())
    }

    /// Letters `A_0 ..= A_N`.
    pub fn nonnegative_letters(&self) -> &[Generator] {
        &self.letters[self.leading..]
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

fn block_len(n: &BigInt) -> Result<usize> {
    usize::try_from(n).map_err(|_| Error::OutOfRange("continued fraction term too large"))
}

/// Builds the word `L^n1`, `U^n2`, `L^n3`, ... (read in increasing index),
/// dropping the final letter.
pub fn generator_word(cf: &ContinuedFraction) -> Result<GeneratorWord> {
    let terms = cf.terms();
    if terms.len() < 2 {
        return Err(Error::SingleTerm);
    }
    let leading = block_len(&terms[0])?;
    let mut letters = Vec::new();
    let mut letter = Generator::L;
    for term in terms {
        let n = block_len(term)?;
        letters
            .try_reserve(n)
            .map_err(|_| Error::OutOfRange("word too long"))?;
        letters.extend(core::iter::repeat_n(letter, n));
        letter = letter.flip();
    }
    letters.pop();
    Ok(GeneratorWord {
        start_index: -BigInt::from(leading),
        leading,
        letters,
    })
}

/// A 2x2 integer matrix `[[a, b], [c, d]]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mat2 {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
}

impl Mat2 {
    pub fn new(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        c: impl Into<BigInt>,
        d: impl Into<BigInt>,
    ) -> Self {
        Mat2 {
            a: a.into(),
            b: b.into(),
            c: c.into(),
            d: d.into(),
        }
    }

    pub fn identity() -> Self {
        Mat2 {
            a: BigInt::one(),
            b: BigInt::zero(),
            c: BigInt::zero(),
            d: BigInt::one(),
        }
    }

    pub fn det(&self) -> BigInt {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn rows(&self) -> [(BigInt, BigInt); 2] {
        [
            (self.a.clone(), self.b.clone()),
            (self.c.clone(), self.d.clone()),
        ]
    }

    /// `g * self`, done as a row operation.
    pub fn left_mul(&mut self, g: Generator) {
        match g {
            Generator::U => {
                self.a += &self.c;
                self.b += &self.d;
            }
            Generator::L => {
                self.c += &self.a;
                self.d += &self.b;
            }
        }
    }
}

impl Mul for &Mat2 {
    type Output = Mat2;

    fn mul(self, rhs: &Mat2) -> Mat2 {
        Mat2 {
            a: &self.a * &rhs.a + &self.b * &rhs.c,
            b: &self.a * &rhs.b + &self.b * &rhs.d,
            c: &self.c * &rhs.a + &self.d * &rhs.c,
            d: &self.c * &rhs.b + &self.d * &rhs.d,
        }
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

/// `M_t = A_t A_{t-1} ... A_{-n1}` for `t = 0 ..= N`.
pub fn partial_products(word: &GeneratorWord) -> Vec<Mat2> {
    let (prefix, rest) = word.letters.split_at(word.leading);
    let mut m = Mat2::identity();
    for &g in prefix {
        m.left_mul(g);
    }
    rest.iter()
        .map(|&g| {
            m.left_mul(g);
            m.clone()
        })
        .collect()
}

/// `a d + b c`.
pub fn slope_of_matrix(m: &Mat2) -> BigInt {
    &m.a * &m.d + &m.b * &m.c
}

/// The row sum `(a + c, b + d)`.
pub fn intermediate_of_matrix(m: &Mat2) -> (BigInt, BigInt) {
    (&m.a + &m.c, &m.b + &m.d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::cf_expand;
    use alloc::vec;
    use Generator::{L, U};

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn word_of_41_29() {
        let w = generator_word(&cf_expand(41, 29).unwrap()).unwrap();
        assert_eq!(w.start_index(), &big(-1));
        assert_eq!(w.top_index(), 6);
        assert_eq!(w.letters(), &[L, U, U, L, L, U, U, L]);
        assert_eq!(w.letter(-1), Some(L));
        assert_eq!(w.letter(6), Some(L));
        assert_eq!(w.letter(7), None);
        assert_eq!(w.letter(-2), None);
    }

    #[test]
    fn word_of_181_48() {
        let w = generator_word(&cf_expand(181, 48).unwrap()).unwrap();
        assert_eq!(w.start_index(), &big(-3));
        assert_eq!(w.top_index(), 8);
        assert_eq!(w.letters(), &[L, L, L, U, L, L, L, U, U, L, U, U]);
    }

    #[test]
    fn word_of_3_2() {
        let w = generator_word(&cf_expand(3, 2).unwrap()).unwrap();
        assert_eq!(w.top_index(), 0);
        assert_eq!(w.letters(), &[L, U]);
    }

    #[test]
    fn single_term_rejected() {
        let cf = ContinuedFraction::new(vec![big(5)]).unwrap();
        assert_eq!(generator_word(&cf), Err(Error::SingleTerm));
    }

    #[test]
    fn products_of_41_29() {
        let w = generator_word(&cf_expand(41, 29).unwrap()).unwrap();
        let ms = partial_products(&w);
        assert_eq!(ms.len(), 7);
        assert_eq!(ms[0], Mat2::new(2, 1, 1, 1));
        assert_eq!(ms[1], Mat2::new(3, 2, 1, 1));
        assert_eq!(ms[6], Mat2::new(17, 12, 24, 17));
        // incremental row operations agree with full matrix products
        let mut full = Mat2::identity();
        for (i, &g) in w.letters().iter().enumerate() {
            full = &g.matrix() * &full;
            if i >= 1 {
                assert_eq!(full, ms[i - 1]);
            }
        }
    }

    #[test]
    fn products_of_3_2() {
        let w = generator_word(&cf_expand(3, 2).unwrap()).unwrap();
        assert_eq!(partial_products(&w), vec![Mat2::new(2, 1, 1, 1)]);
    }

    #[test]
    fn slope_examples() {
        assert_eq!(slope_of_matrix(&Mat2::new(3, 2, 1, 1)), big(5));
        assert_eq!(slope_of_matrix(&Mat2::new(17, 12, 24, 17)), big(577));
        assert_eq!(slope_of_matrix(&Mat2::identity()), big(1));
    }

    #[test]
    fn intermediate_examples() {
        assert_eq!(
            intermediate_of_matrix(&Mat2::new(2, 1, 1, 1)),
            (big(3), big(2))
        );
        assert_eq!(
            intermediate_of_matrix(&Mat2::new(132, 35, 49, 13)),
            (big(181), big(48))
        );
        assert_eq!(intermediate_of_matrix(&Mat2::identity()), (big(1), big(1)));
        let w = generator_word(&cf_expand(181, 48).unwrap()).unwrap();
        assert_eq!(
            partial_products(&w).last(),
            Some(&Mat2::new(132, 35, 49, 13))
        );
    }
}
