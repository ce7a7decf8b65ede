use std::fmt;
use std::ops::Mul;

use super::GroupError;

/// A generator or its inverse. Generators are numbered from 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    generator: usize,
    inverse: bool,
}

impl Letter {
    pub fn new(generator: usize, exponent: i8) -> Self {
        assert!(generator >= 1, "generators are numbered from 1");
        assert!(
            exponent == 1 || exponent == -1,
            "letter exponent must be +1 or -1"
        );
        Letter {
            generator,
            inverse: exponent < 0,
        }
    }

    pub fn generator(self) -> usize {
        self.generator
    }

    pub fn exponent(self) -> i8 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    pub fn is_inverse(self) -> bool {
        self.inverse
    }

    pub fn inverted(self) -> Self {
        Letter {
            generator: self.generator,
            inverse: !self.inverse,
        }
    }

    fn cancels(self, other: Letter) -> bool {
        self.generator == other.generator && self.inverse != other.inverse
    }
}

/// Element of a free group, always stored freely reduced.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn empty() -> Self {
        Word::default()
    }

    pub fn generator(g: usize) -> Self {
        Word {
            letters: vec![Letter::new(g, 1)],
        }
    }

    /// Freely reduces an arbitrary letter sequence.
    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Self {
        let mut out: Vec<Letter> = Vec::new();
        for l in letters {
            match out.last() {
                Some(&last) if last.cancels(l) => {
                    out.pop();
                }
                _ => out.push(l),
            }
        }
        Word { letters: out }
    }

    /// Builds `g1^e1 g2^e2 ...` from (generator, integer exponent) pairs.
    pub fn from_exponents(syllables: &[(usize, i64)]) -> Self {
        Word::from_letters(syllables.iter().flat_map(|&(g, e)| {
            let l = Letter::new(g, if e < 0 { -1 } else { 1 });
            std::iter::repeat_n(l, e.unsigned_abs() as usize)
        }))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Largest generator index used, or 0 for the empty word.
    pub fn max_generator(&self) -> usize {
        self.letters.iter().map(|l| l.generator).max().unwrap_or(0)
    }

    pub fn multiply(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        let mut rest = other.letters.as_slice();
        while let (Some(&last), Some(&first)) = (letters.last(), rest.first()) {
            if !last.cancels(first) {
                break;
            }
            letters.pop();
            rest = &rest[1..];
        }
        letters.extend_from_slice(rest);
        Word { letters }
    }

    pub fn inverse(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(|l| l.inverted()).collect(),
        }
    }

    /// Strips cancelling first/last pairs, leaving a cyclically reduced conjugate.
    pub fn cyclic_reduce(&self) -> Word {
        let mut lo = 0;
        let mut hi = self.letters.len();
        while hi - lo >= 2 && self.letters[lo].cancels(self.letters[hi - 1]) {
            lo += 1;
            hi -= 1;
        }
        Word {
            letters: self.letters[lo..hi].to_vec(),
        }
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        match (self.letters.first(), self.letters.last()) {
            (Some(&f), Some(&l)) if self.letters.len() >= 2 => !f.cancels(l),
            _ => true,
        }
    }

    /// Rotation starting at letter `k`. Only meaningful for cyclically reduced words,
    /// where the result is again freely reduced.
    pub fn rotate(&self, k: usize) -> Word {
        if self.letters.is_empty() {
            return Word::empty();
        }
        let k = k % self.letters.len();
        let mut letters = self.letters[k..].to_vec();
        letters.extend_from_slice(&self.letters[..k]);
        Word::from_letters(letters)
    }

    /// Whether the two words are equal up to cyclic permutation and inversion, after
    /// cyclic reduction.
    pub fn is_cyclic_variant_of(&self, other: &Word) -> bool {
        let a = self.cyclic_reduce();
        let b = other.cyclic_reduce();
        if a.len() != b.len() {
            return false;
        }
        if a.is_empty() {
            return true;
        }
        let b_inv = b.inverse();
        (0..a.len()).any(|k| {
            let r = a.rotate(k);
            r == b || r == b_inv
        })
    }

    pub fn exponent_sum(&self, g: usize) -> i64 {
        self.letters
            .iter()
            .filter(|l| l.generator == g)
            .map(|l| i64::from(l.exponent()))
            .sum()
    }

    pub fn occurrences(&self, g: usize) -> usize {
        self.letters.iter().filter(|l| l.generator == g).count()
    }

    /// Replaces every occurrence of generator `g` by `image` (and `g^-1` by its inverse).
    pub fn substitute(&self, g: usize, image: &Word) -> Word {
        let image_inv = image.inverse();
        let mut out = Word::empty();
        for &l in &self.letters {
            let piece = if l.generator != g {
                Word { letters: vec![l] }
            } else if l.inverse {
                image_inv.clone()
            } else {
                image.clone()
            };
            out = out.multiply(&piece);
        }
        out
    }

    /// Applies `f` to every generator index and freely reduces the result.
    pub fn map_generators(&self, mut f: impl FnMut(usize) -> usize) -> Word {
        Word::from_letters(self.letters.iter().map(|l| Letter {
            generator: f(l.generator),
            inverse: l.inverse,
        }))
    }

    /// Text form using the standard generator names, e.g. `a^-1 c a b^-1`.
    pub fn display(&self) -> WordDisplay<'_> {
        WordDisplay(self)
    }

    /// Parses a word over the standard generator names (`a`..`z`, then `g27`, ...).
    pub fn parse(text: &str) -> Result<Word, GroupError> {
        parse_word_with(text, generator_index)
    }
}

impl Mul for &Word {
    type Output = Word;

    fn mul(self, rhs: &Word) -> Word {
        self.multiply(rhs)
    }
}

/// Standard name of generator `i`: `a`..`z` for 1..=26, then `g27`, `g28`, ...
pub fn generator_name(i: usize) -> String {
    if (1..=26).contains(&i) {
        char::from(b'a' + (i - 1) as u8).to_string()
    } else {
        format!("g{i}")
    }
}

/// Inverse of [`generator_name`].
pub fn generator_index(name: &str) -> Option<usize> {
    let bytes = name.as_bytes();
    match bytes {
        [c] if c.is_ascii_lowercase() => Some(usize::from(c - b'a') + 1),
        [b'g', rest @ ..] if !rest.is_empty() && rest.iter().all(u8::is_ascii_digit) => {
            name[1..].parse().ok().filter(|&i| i > 26)
        }
        _ => None,
    }
}

pub struct WordDisplay<'a>(&'a Word);

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (i, l) in self.0.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", generator_name(l.generator))?;
            if l.inverse {
                write!(f, "^-1")?;
            }
        }
        Ok(())
    }
}

/// Parses a word whose generator names are resolved by `resolve`.
///
/// A name is one ASCII letter followed by optional digits. Each may carry an integer
/// exponent `^n`, `^-n` or `⁻¹`. Names may be juxtaposed or separated by whitespace,
/// `*` or `·`. A lone `1` denotes the empty word.
pub fn parse_word_with(
    text: &str,
    resolve: impl Fn(&str) -> Option<usize>,
) -> Result<Word, GroupError> {
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut i = 0;
    let mut letters = Vec::new();
    while i < chars.len() {
        let (pos, c) = chars[i];
        if c.is_whitespace() || c == '*' || c == '·' {
            i += 1;
            continue;
        }
        if c == '1' && chars.get(i + 1).is_none_or(|&(_, n)| !n.is_ascii_digit()) {
            i += 1;
            continue;
        }
        if !c.is_ascii_alphabetic() {
            return Err(GroupError::Syntax(format!(
                "unexpected '{c}' at offset {pos} in \"{text}\""
            )));
        }
        let start = pos;
        i += 1;
        while i < chars.len() && chars[i].1.is_ascii_digit() {
            i += 1;
        }
        let end = chars.get(i).map_or(text.len(), |&(p, _)| p);
        let name = &text[start..end];
        let g = resolve(name).ok_or_else(|| GroupError::UnknownGenerator(name.to_string()))?;

        let mut exponent: i64 = 1;
        if i < chars.len() && chars[i].1 == '^' {
            i += 1;
            let exp_start = chars.get(i).map_or(text.len(), |&(p, _)| p);
            if i < chars.len() && (chars[i].1 == '-' || chars[i].1 == '+') {
                i += 1;
            }
            while i < chars.len() && chars[i].1.is_ascii_digit() {
                i += 1;
            }
            let exp_end = chars.get(i).map_or(text.len(), |&(p, _)| p);
            exponent = text[exp_start..exp_end].parse().map_err(|_| {
                GroupError::Syntax(format!("bad exponent after '{name}' in \"{text}\""))
            })?;
        } else if i + 1 < chars.len() && chars[i].1 == '⁻' && chars[i + 1].1 == '¹' {
            i += 2;
            exponent = -1;
        }
        let l = Letter::new(g, if exponent < 0 { -1 } else { 1 });
        letters.extend(std::iter::repeat_n(l, exponent.unsigned_abs() as usize));
    }
    Ok(Word::from_letters(letters))
}
