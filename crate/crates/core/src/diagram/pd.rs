use std::collections::BTreeMap;

use super::{Crossing, DiagramError, KnotDiagram, Sign};

/// Parses a planar-diagram code such as `X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)`.
///
/// Each tuple lists the four segment labels around a crossing counterclockwise, starting
/// with the segment arriving under it; the third entry leaves under it and the second and
/// fourth belong to the over-strand. The knot is traversed from the under-exit of the
/// first tuple, which orients every segment. A crossing is positive when the over-strand
/// arrives at the fourth position and leaves through the second.
///
/// Segments are merged into arcs at over-passages. Arcs are numbered in traversal order,
/// arc 1 being the one containing the smallest label. The empty code is the unknot.
/// Tuples may use `()` or `[]`, may be separated by commas or whitespace, and the whole
/// list may be wrapped in `PD[...]`.
pub fn parse_pd(text: &str) -> Result<KnotDiagram, DiagramError> {
    let tuples = lex(text)?;
    if tuples.is_empty() {
        return Ok(KnotDiagram::unknot());
    }

    let mut ends: BTreeMap<u64, Vec<(usize, usize)>> = BTreeMap::new();
    for (c, t) in tuples.iter().enumerate() {
        for (p, &label) in t.iter().enumerate() {
            ends.entry(label).or_default().push((c, p));
        }
    }
    if let Some((label, e)) = ends.iter().find(|(_, e)| e.len() != 2) {
        return Err(DiagramError::BadIncidence(format!(
            "label {label} appears {} times, expected 2",
            e.len()
        )));
    }

    let n = tuples.len();
    // arc index (before renumbering) of the segment at each tuple position
    let mut segment_arc = vec![[usize::MAX; 4]; n];
    let mut over_entry = vec![0usize; n];
    let mut entries_seen = 0;
    let mut arc = 0;
    let (mut c, mut exit) = (0usize, 2usize);
    loop {
        let label = tuples[c][exit];
        let (nc, entry) = ends[&label]
            .iter()
            .copied()
            .find(|&e| e != (c, exit))
            .expect("every label has two ends");
        if entry == 2 {
            return Err(DiagramError::BadIncidence(format!(
                "segment {label} arrives at crossing {} through its outgoing under position",
                nc + 1
            )));
        }
        if segment_arc[nc][entry] != usize::MAX {
            return Err(DiagramError::BadIncidence(format!(
                "segment {label} is traversed twice"
            )));
        }
        segment_arc[c][exit] = arc;
        segment_arc[nc][entry] = arc;
        entries_seen += 1;
        if entry == 0 {
            arc += 1;
        } else {
            over_entry[nc] = entry;
        }
        c = nc;
        exit = (entry + 2) % 4;
        if (c, exit) == (0, 2) {
            break;
        }
        if entries_seen > 2 * n {
            return Err(DiagramError::BadIncidence(
                "traversal does not close".into(),
            ));
        }
    }
    if entries_seen != 2 * n {
        return Err(DiagramError::DisconnectedUnderCycle {
            visited: entries_seen,
            total: 2 * n,
        });
    }
    debug_assert_eq!(arc, n);

    let smallest = *ends.keys().next().expect("nonempty");
    let (sc, sp) = ends[&smallest][0];
    let first_arc = segment_arc[sc][sp];
    let renumber = |a: usize| (a + n - first_arc) % n + 1;

    let crossings = (0..n)
        .map(|c| {
            let s = &segment_arc[c];
            debug_assert_eq!(s[1], s[3]);
            let sign = if over_entry[c] == 3 {
                Sign::Positive
            } else {
                Sign::Negative
            };
            Crossing::new(renumber(s[1]), renumber(s[0]), renumber(s[2]), sign)
        })
        .collect();

    KnotDiagram::new(n, crossings)
}

fn lex(text: &str) -> Result<Vec<[u64; 4]>, DiagramError> {
    let mut s = Lexer::new(text);
    s.skip_separators();
    let wrapped = if s.eat_str("PD") {
        s.skip_space();
        let close = match s.bump() {
            Some('[') => ']',
            Some('(') => ')',
            _ => return Err(DiagramError::syntax(s.offset(), "expected '[' after PD")),
        };
        Some(close)
    } else {
        None
    };

    let mut tuples = Vec::new();
    loop {
        s.skip_separators();
        match s.peek() {
            None => break,
            Some(c) if Some(c) == wrapped => {
                s.bump();
                s.skip_separators();
                if s.peek().is_some() {
                    return Err(DiagramError::syntax(s.offset(), "trailing input after PD"));
                }
                return Ok(tuples);
            }
            Some('X') => {
                s.bump();
                tuples.push(s.tuple()?);
            }
            Some(c) => {
                return Err(DiagramError::syntax(
                    s.offset(),
                    format!("expected 'X', found '{c}'"),
                ))
            }
        }
    }
    if wrapped.is_some() {
        return Err(DiagramError::syntax(s.offset(), "unterminated PD[...]"));
    }
    Ok(tuples)
}

struct Lexer<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn new(text: &'a str) -> Self {
        Lexer { text, pos: 0 }
    }

    fn offset(&self) -> usize {
        self.pos
    }

    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn eat_str(&mut self, s: &str) -> bool {
        if self.text[self.pos..].starts_with(s) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    fn skip_space(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.bump();
        }
    }

    fn skip_separators(&mut self) {
        while self.peek().is_some_and(|c| c.is_whitespace() || c == ',') {
            self.bump();
        }
    }

    fn tuple(&mut self) -> Result<[u64; 4], DiagramError> {
        self.skip_space();
        let close = match self.bump() {
            Some('(') => ')',
            Some('[') => ']',
            _ => return Err(DiagramError::syntax(self.pos, "expected '(' after X")),
        };
        let mut out = [0u64; 4];
        for (k, slot) in out.iter_mut().enumerate() {
            self.skip_space();
            if k > 0 {
                if self.peek() == Some(',') {
                    self.bump();
                }
                self.skip_space();
            }
            *slot = self.label()?;
        }
        self.skip_space();
        if self.bump() != Some(close) {
            return Err(DiagramError::syntax(
                self.pos,
                format!("expected '{close}' closing a 4-tuple"),
            ));
        }
        Ok(out)
    }

    fn label(&mut self) -> Result<u64, DiagramError> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.bump();
        }
        let digits = &self.text[start..self.pos];
        match digits.parse::<u64>() {
            Ok(v) if v > 0 => Ok(v),
            Ok(_) => Err(DiagramError::syntax(start, "labels must be positive")),
            Err(_) => Err(DiagramError::syntax(
                start,
                "expected a positive integer label",
            )),
        }
    }
}
