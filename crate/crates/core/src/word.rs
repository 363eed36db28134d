//! Words in the generators `a` and `b`.
//!
//! Grammar, whitespace separating terms:
//!
//! ```text
//! word     := term*
//! term     := gen exponent?
//! gen      := 'a' | 'b'
//! exponent := '^' '-'? digit+
//! ```
//!
//! `a` is the stable letter (acting by shift) and `b` the base generator.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    A,
    B,
}

impl Generator {
    fn letter(self) -> char {
        match self {
            Generator::A => 'a',
            Generator::B => 'b',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("unexpected character {found:?} at column {column}")]
    UnexpectedChar { column: usize, found: char },
    #[error("malformed exponent at column {column}")]
    MalformedExponent { column: usize },
}

impl ParseError {
    pub fn column(&self) -> usize {
        match self {
            ParseError::UnexpectedChar { column, .. }
            | ParseError::MalformedExponent { column } => *column,
        }
    }
}

/// A freely reduced word: no zero exponents, no two adjacent letters with
/// the same generator.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GeneratorWord {
    letters: Vec<(Generator, BigInt)>,
}

impl GeneratorWord {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a word from arbitrary syllables, reducing as it goes.
    pub fn from_letters<I>(letters: I) -> Self
    where
        I: IntoIterator<Item = (Generator, BigInt)>,
    {
        let mut w = Self::empty();
        for (g, e) in letters {
            w.push(g, e);
        }
        w
    }

    pub fn letter(g: Generator, exponent: impl Into<BigInt>) -> Self {
        Self::from_letters([(g, exponent.into())])
    }

    /// The conjugate `a^-i b^e a^i`, written `b_i^e`.
    pub fn conjugate_b(i: impl Into<BigInt>, e: impl Into<BigInt>) -> Self {
        let i = i.into();
        Self::from_letters([
            (Generator::A, -&i),
            (Generator::B, e.into()),
            (Generator::A, i),
        ])
    }

    pub fn letters(&self) -> &[(Generator, BigInt)] {
        &self.letters
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Appends `g^e`, merging with the last syllable when possible.
    pub fn push(&mut self, g: Generator, e: BigInt) {
        if e.is_zero() {
            return;
        }
        match self.letters.last_mut() {
            Some((last, exp)) if *last == g => {
                *exp += e;
                if exp.is_zero() {
                    self.letters.pop();
                }
            }
            _ => self.letters.push((g, e)),
        }
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut w = self.clone();
        for (g, e) in &other.letters {
            w.push(*g, e.clone());
        }
        w
    }

    pub fn inverse(&self) -> Self {
        Self {
            letters: self.letters.iter().rev().map(|(g, e)| (*g, -e)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::empty(), |acc, _| acc.concat(self))
    }

    /// The commutator `u^-1 v^-1 u v`.
    pub fn commutator(u: &Self, v: &Self) -> Self {
        u.inverse().concat(&v.inverse()).concat(u).concat(v)
    }
}

impl fmt::Display for GeneratorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (g, e)) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", g.letter())?;
            if !e.is_one() {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for GeneratorWord {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_word(s)
    }
}

/// Parses the text form of a word; columns in errors are 1-based.
pub fn parse_word(text: &str) -> Result<GeneratorWord, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut word = GeneratorWord::empty();
    let mut pos = 0;
    while pos < chars.len() {
        let ch = chars[pos];
        let g = match ch {
            c if c.is_whitespace() => {
                pos += 1;
                continue;
            }
            'a' => Generator::A,
            'b' => Generator::B,
            found => {
                return Err(ParseError::UnexpectedChar {
                    column: pos + 1,
                    found,
                })
            }
        };
        pos += 1;
        let mut exponent = BigInt::one();
        if chars.get(pos) == Some(&'^') {
            let caret = pos + 1;
            pos += 1;
            let negative = chars.get(pos) == Some(&'-');
            if negative {
                pos += 1;
            }
            let start = pos;
            while chars.get(pos).is_some_and(char::is_ascii_digit) {
                pos += 1;
            }
            if start == pos {
                return Err(ParseError::MalformedExponent { column: caret });
            }
            let digits: String = chars[start..pos].iter().collect();
            exponent = digits.parse().expect("ascii digits");
            if negative {
                exponent = -exponent;
            }
        }
        word.push(g, exponent);
    }
    Ok(word)
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;

    fn w(letters: &[(Generator, i64)]) -> GeneratorWord {
        GeneratorWord::from_letters(letters.iter().map(|&(g, e)| (g, BigInt::from(e))))
    }

    #[test]
    fn basic_terms() {
        let parsed = parse_word("a^2 b^-1").unwrap();
        assert_eq!(
            parsed.letters(),
            w(&[(Generator::A, 2), (Generator::B, -1)]).letters()
        );
        assert_eq!(parsed.letters().len(), 2);
    }

    #[test]
    fn empty_input() {
        assert!(parse_word("").unwrap().is_empty());
        assert!(parse_word("   ").unwrap().is_empty());
    }

    #[test]
    fn unknown_letter() {
        assert_eq!(
            parse_word("c"),
            Err(ParseError::UnexpectedChar {
                column: 1,
                found: 'c'
            })
        );
        assert_eq!(parse_word("a b x").unwrap_err().column(), 5);
    }

    #[test]
    fn malformed_exponents() {
        assert_eq!(
            parse_word("a^"),
            Err(ParseError::MalformedExponent { column: 2 })
        );
        assert_eq!(
            parse_word("b a^-"),
            Err(ParseError::MalformedExponent { column: 4 })
        );
        assert!(parse_word("a^x").is_err());
    }

    #[test]
    fn zero_exponent_normalized_away() {
        assert!(parse_word("a^0").unwrap().is_empty());
        assert_eq!(parse_word("b a^0 b").unwrap(), w(&[(Generator::B, 2)]));
    }

    #[test]
    fn free_reduction_cascades() {
        assert_eq!(parse_word("a b b^-1 a^-1").unwrap(), GeneratorWord::empty());
        assert_eq!(
            parse_word("ab^-1").unwrap(),
            w(&[(Generator::A, 1), (Generator::B, -1)])
        );
    }

    #[test]
    fn big_exponent() {
        let parsed = parse_word("b^123456789012345678901234567890").unwrap();
        assert_eq!(parsed.to_string(), "b^123456789012345678901234567890");
    }

    #[test]
    fn conjugate_b_form() {
        assert_eq!(GeneratorWord::conjugate_b(2, 1).to_string(), "a^-2 b a^2");
        assert_eq!(GeneratorWord::conjugate_b(0, -3).to_string(), "b^-3");
    }

    fn arb_word() -> impl Strategy<Value = GeneratorWord> {
        prop::collection::vec((prop::bool::ANY, -5i64..=5), 0..20).prop_map(|raw| {
            GeneratorWord::from_letters(raw.into_iter().map(|(is_a, e)| {
                (
                    if is_a { Generator::A } else { Generator::B },
                    BigInt::from(e),
                )
            }))
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn print_then_parse_round_trips(word in arb_word()) {
            prop_assert_eq!(parse_word(&word.to_string()).unwrap(), word);
        }

        #[test]
        fn normalized_invariants(word in arb_word()) {
            prop_assert!(word.letters().iter().all(|(_, e)| !e.is_zero()));
            prop_assert!(word.letters().windows(2).all(|p| p[0].0 != p[1].0));
            prop_assert!(word.concat(&word.inverse()).is_empty());
        }
    }
}
