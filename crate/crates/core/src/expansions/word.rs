//! Binary words and eventually-periodic 0/1 sequences.
//!
//! An `EPSequence` stores a sequence `pre . per per per ...` in a
//! canonical form so that equal sequences have equal representations:
//! the period is primitive (not a proper power of a shorter word) and
//! the last preperiod symbol differs from the last period symbol
//! (otherwise the boundary could be rolled one step left).

use std::fmt;

use serde::{Deserialize, Serialize, Serializer};

use crate::{Error, Result};

/// A finite word over {0, 1}.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct BitWord(Vec<u8>);

impl BitWord {
    pub fn new(bits: Vec<u8>) -> Result<Self> {
        if bits.iter().any(|&b| b > 1) {
            return Err(Error::ParseSequence {
                literal: format!("{bits:?}"),
                reason: "digits must be 0 or 1",
            });
        }
        Ok(BitWord(bits))
    }

    /// Parses a string of ASCII `0`/`1` characters; empty is allowed.
    pub fn parse(s: &str) -> Result<Self> {
        let mut bits = Vec::with_capacity(s.len());
        for c in s.chars() {
            match c {
                '0' => bits.push(0),
                '1' => bits.push(1),
                _ => {
                    return Err(Error::ParseSequence {
                        literal: s.to_owned(),
                        reason: "digits must be 0 or 1",
                    })
                }
            }
        }
        Ok(BitWord(bits))
    }

    pub fn bits(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn count_zeros(&self) -> usize {
        self.0.iter().filter(|&&b| b == 0).count()
    }

    pub fn count_ones(&self) -> usize {
        self.len() - self.count_zeros()
    }

    /// Digitwise complement `0 <-> 1`.
    pub fn flip(&self) -> BitWord {
        BitWord(self.0.iter().map(|&b| 1 - b).collect())
    }

    pub fn concat(words: &[&BitWord]) -> BitWord {
        let mut bits = Vec::new();
        for w in words {
            bits.extend_from_slice(w.bits());
        }
        BitWord(bits)
    }
}

impl fmt::Display for BitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

impl Serialize for BitWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for BitWord {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        BitWord::parse(&s).map_err(serde::de::Error::custom)
    }
}

/// Reduced nonnegative rational, used for exact digit frequencies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rational {
    pub num: u64,
    pub den: u64,
}

impl Rational {
    pub fn new(num: u64, den: u64) -> Self {
        assert!(den != 0, "zero denominator");
        let g = gcd(num.max(1), den);
        if num == 0 {
            return Rational { num: 0, den: 1 };
        }
        Rational {
            num: num / g,
            den: den / g,
        }
    }

    pub fn value(&self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Eventually periodic sequence `pre . per^infinity` in canonical form.
///
/// Text literal: `PRE|PER`, e.g. `|10` for (10)^inf and `1|0` for 1000...
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EPSequence {
    pre: BitWord,
    per: BitWord,
}

impl EPSequence {
    /// Builds the canonical representative; the period must be nonempty.
    pub fn new(pre: BitWord, per: BitWord) -> Result<Self> {
        if per.is_empty() {
            return Err(Error::ParseSequence {
                literal: format!("{pre}|{per}"),
                reason: "period must be nonempty",
            });
        }
        let mut pre = pre.0;
        let mut per = primitive_root(&per.0);
        // Roll the boundary left while the last preperiod symbol equals
        // its cyclic predecessor (the last period symbol): pre a | w  ==
        // pre | a w' with w = w' a.
        while let Some(&last) = pre.last() {
            if last == *per.last().unwrap() {
                pre.pop();
                per.rotate_right(1);
            } else {
                break;
            }
        }
        Ok(EPSequence {
            pre: BitWord(pre),
            per: BitWord(per),
        })
    }

    /// Parses the `PRE|PER` literal.
    pub fn parse(s: &str) -> Result<Self> {
        let mut parts = s.splitn(2, '|');
        let pre = parts.next().unwrap_or("");
        let per = parts.next().ok_or(Error::ParseSequence {
            literal: s.to_owned(),
            reason: "expected PRE|PER with exactly one '|'",
        })?;
        if per.contains('|') {
            return Err(Error::ParseSequence {
                literal: s.to_owned(),
                reason: "expected PRE|PER with exactly one '|'",
            });
        }
        EPSequence::new(BitWord::parse(pre)?, BitWord::parse(per)?)
    }

    /// Purely periodic sequence `w^infinity`.
    pub fn periodic(per: BitWord) -> Result<Self> {
        EPSequence::new(BitWord::default(), per)
    }

    pub fn pre(&self) -> &BitWord {
        &self.pre
    }

    pub fn per(&self) -> &BitWord {
        &self.per
    }

    /// 1-based digit access.
    pub fn digit(&self, n: usize) -> u8 {
        debug_assert!(n >= 1);
        let m = self.pre.len();
        if n <= m {
            self.pre.0[n - 1]
        } else {
            self.per.0[(n - m - 1) % self.per.len()]
        }
    }

    /// Number of distinct shifts; shifting past the preperiod cycles
    /// through the rotations of the (primitive) period.
    pub fn distinct_shifts(&self) -> usize {
        self.pre.len() + self.per.len()
    }

    /// The shifted sequence sigma^n (drop the first n digits), canonical.
    pub fn shift(&self, n: usize) -> EPSequence {
        let m = self.pre.len();
        let k = self.per.len();
        let (pre, per) = if n <= m {
            (self.pre.0[n..].to_vec(), self.per.0.clone())
        } else {
            let t = (n - m) % k;
            let mut w = self.per.0.clone();
            w.rotate_left(t);
            (Vec::new(), w)
        };
        EPSequence::new(BitWord(pre), BitWord(per)).expect("shift preserves validity")
    }

    pub fn flip(&self) -> EPSequence {
        EPSequence {
            pre: self.pre.flip(),
            per: self.per.flip(),
        }
    }

    /// First n digits as a word.
    pub fn prefix(&self, n: usize) -> BitWord {
        BitWord((1..=n).map(|i| self.digit(i)).collect())
    }

    /// Exact frequency of the digit 0, i.e. zeros in the period over
    /// the period length. Always defined for eventually periodic input.
    pub fn digit_freq(&self) -> Rational {
        Rational::new(self.per.count_zeros() as u64, self.per.len() as u64)
    }

    /// Length of the longest common prefix with `other`; `None` when
    /// the sequences are equal. Two distinct eventually periodic
    /// sequences must differ within max(preperiods) + lcm(periods).
    pub fn common_prefix_len(&self, other: &EPSequence) -> Option<usize> {
        if self == other {
            return None;
        }
        let bound = self.pre.len().max(other.pre.len()) + lcm(self.per.len(), other.per.len());
        (1..=bound)
            .find(|&i| self.digit(i) != other.digit(i))
            .map(|i| i - 1)
    }
}

impl fmt::Display for EPSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.pre, self.per)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a as u64, b as u64) as usize * b
}

/// Smallest word whose repetition gives `w`.
fn primitive_root(w: &[u8]) -> Vec<u8> {
    let k = w.len();
    for d in 1..=k {
        if k.is_multiple_of(d) && w.chunks(d).all(|c| c == &w[..d]) {
            return w[..d].to_vec();
        }
    }
    unreachable!("d = k always matches")
}

/// Convergence report for streamed (not eventually periodic) digit
/// sources; the eventually periodic case always has an exact value.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FreqEstimate {
    Converged { value: f64 },
    Oscillates { low: f64, high: f64 },
}

/// Monte-Carlo digit-frequency estimate over a streamed digit source.
///
/// Compares the running frequency at n/2 and n; a spread above `tol`
/// is reported as oscillation with the two window values.
pub fn digit_freq_stream<I: IntoIterator<Item = u8>>(
    digits: I,
    n: usize,
    tol: f64,
) -> FreqEstimate {
    assert!(n >= 2, "need at least two digits");
    let mut zeros_half = 0usize;
    let mut zeros = 0usize;
    let mut taken = 0usize;
    for d in digits.into_iter().take(n) {
        taken += 1;
        if d == 0 {
            zeros += 1;
            if taken <= n / 2 {
                zeros_half += 1;
            }
        } else if taken <= n / 2 && d != 1 {
            panic!("digits must be 0 or 1");
        }
    }
    let half = zeros_half as f64 / (n / 2) as f64;
    let full = zeros as f64 / taken as f64;
    if (half - full).abs() <= tol {
        FreqEstimate::Converged { value: full }
    } else {
        FreqEstimate::Oscillates {
            low: half.min(full),
            high: half.max(full),
        }
    }
}
