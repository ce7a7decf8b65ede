//! Oriented knot diagrams as combinatorial data.
//!
//! A diagram with `c ≥ 1` crossings has exactly `c` arcs, an arc being a maximal strand
//! running from one under-passage to the next. Arcs are numbered from 1. Each crossing
//! records its over-arc, the arc arriving under it and the arc leaving under it, and its
//! sign: `+1` when the over-strand passes from left to right as seen by the arriving
//! under-strand.

mod gauss;
mod pd;

use std::fmt;

use thiserror::Error;

pub use gauss::parse_gauss;
pub use pd::parse_pd;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("malformed input at offset {offset}: {message}")]
    MalformedSyntax { offset: usize, message: String },
    #[error("inconsistent incidence: {0}")]
    BadIncidence(String),
    #[error("under-strand passages form more than one cycle ({visited} of {total} passages reachable); links are not supported")]
    DisconnectedUnderCycle { visited: usize, total: usize },
    #[error("crossing {crossing} has different signs on its over and under visits")]
    SignMismatch { crossing: u64 },
}

impl DiagramError {
    pub(crate) fn syntax(offset: usize, message: impl Into<String>) -> Self {
        DiagramError::MalformedSyntax {
            offset,
            message: message.into(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn value(self) -> i8 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Positive => '+',
            Sign::Negative => '-',
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Crossing {
    over: usize,
    under_in: usize,
    under_out: usize,
    sign: Sign,
}

impl Crossing {
    pub fn new(over: usize, under_in: usize, under_out: usize, sign: Sign) -> Self {
        Crossing {
            over,
            under_in,
            under_out,
            sign,
        }
    }

    pub fn over(&self) -> usize {
        self.over
    }

    pub fn under_in(&self) -> usize {
        self.under_in
    }

    pub fn under_out(&self) -> usize {
        self.under_out
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }
}

/// Passage of the traversal through a crossing, identified by crossing index.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Passage {
    Over(usize),
    Under(usize),
}

/// An oriented one-component knot diagram.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KnotDiagram {
    arc_count: usize,
    crossings: Vec<Crossing>,
}

impl KnotDiagram {
    /// Validates the arc/crossing incidence: `arc_count` equals the crossing count (or is
    /// 1 with no crossings), every arc is entered and left under exactly one crossing,
    /// and the under-passages link all arcs into a single cycle.
    pub fn new(arc_count: usize, crossings: Vec<Crossing>) -> Result<Self, DiagramError> {
        if crossings.is_empty() {
            if arc_count != 1 {
                return Err(DiagramError::BadIncidence(format!(
                    "a crossingless diagram has one arc, not {arc_count}"
                )));
            }
            return Ok(Self::unknot());
        }
        let n = crossings.len();
        if arc_count != n {
            return Err(DiagramError::BadIncidence(format!(
                "{n} crossings need {n} arcs, got {arc_count}"
            )));
        }
        let mut next = vec![0usize; n + 1];
        let mut entered = vec![false; n + 1];
        for (i, c) in crossings.iter().enumerate() {
            for id in [c.over, c.under_in, c.under_out] {
                if id == 0 || id > n {
                    return Err(DiagramError::BadIncidence(format!(
                        "crossing {} references arc {id} outside 1..={n}",
                        i + 1
                    )));
                }
            }
            if next[c.under_in] != 0 {
                return Err(DiagramError::BadIncidence(format!(
                    "arc {} ends under two crossings",
                    c.under_in
                )));
            }
            if entered[c.under_out] {
                return Err(DiagramError::BadIncidence(format!(
                    "arc {} starts under two crossings",
                    c.under_out
                )));
            }
            next[c.under_in] = c.under_out;
            entered[c.under_out] = true;
        }
        let mut arc = 1;
        let mut steps = 0;
        loop {
            arc = next[arc];
            steps += 1;
            if arc == 1 {
                break;
            }
        }
        if steps != n {
            return Err(DiagramError::DisconnectedUnderCycle {
                visited: steps,
                total: n,
            });
        }
        Ok(KnotDiagram {
            arc_count,
            crossings,
        })
    }

    /// The zero-crossing unknot: one arc, no crossings.
    pub fn unknot() -> Self {
        KnotDiagram {
            arc_count: 1,
            crossings: Vec::new(),
        }
    }

    pub fn arc_count(&self) -> usize {
        self.arc_count
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn writhe(&self) -> i64 {
        self.crossings
            .iter()
            .map(|c| i64::from(c.sign.value()))
            .sum()
    }

    /// One traversal of the knot starting at the beginning of arc 1.
    ///
    /// Along each arc the over-passages are listed by crossing index, followed by the
    /// under-passage that ends the arc. The diagram does not record the geometric order of
    /// over-passages along an arc; none of the invariants here depend on it.
    pub fn passages(&self) -> Vec<Passage> {
        if self.crossings.is_empty() {
            return Vec::new();
        }
        let n = self.arc_count;
        let mut overs: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
        let mut ending = vec![0usize; n + 1];
        for (i, c) in self.crossings.iter().enumerate() {
            overs[c.over].push(i);
            ending[c.under_in] = i;
        }
        let mut out = Vec::with_capacity(2 * n);
        let mut arc = 1;
        for _ in 0..n {
            out.extend(overs[arc].iter().map(|&i| Passage::Over(i)));
            let ci = ending[arc];
            out.push(Passage::Under(ci));
            arc = self.crossings[ci].under_out;
        }
        out
    }

    /// Signed Gauss code of [`passages`](Self::passages), crossings numbered from 1.
    pub fn to_gauss(&self) -> String {
        self.passages()
            .into_iter()
            .map(|p| {
                let (tag, i) = match p {
                    Passage::Over(i) => ('O', i),
                    Passage::Under(i) => ('U', i),
                };
                format!("{tag}{}{}", i + 1, self.crossings[i].sign.symbol())
            })
            .collect()
    }

    /// PD code of [`passages`](Self::passages): segment `t + 1` is the one arriving at
    /// passage `t`.
    pub fn to_pd(&self) -> String {
        let passages = self.passages();
        let len = passages.len();
        let mut ends = vec![[0usize; 4]; self.crossings.len()];
        for (t, p) in passages.iter().enumerate() {
            let incoming = t + 1;
            let outgoing = (t + 1) % len + 1;
            match *p {
                Passage::Under(i) => {
                    ends[i][0] = incoming;
                    ends[i][2] = outgoing;
                }
                Passage::Over(i) => {
                    let (enter, exit) = match self.crossings[i].sign {
                        Sign::Positive => (3, 1),
                        Sign::Negative => (1, 3),
                    };
                    ends[i][enter] = incoming;
                    ends[i][exit] = outgoing;
                }
            }
        }
        ends.iter()
            .map(|e| format!("X({},{},{},{})", e[0], e[1], e[2], e[3]))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for KnotDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} arcs, {} crossings",
            self.arc_count,
            self.crossings.len()
        )
    }
}
