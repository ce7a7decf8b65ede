use std::collections::BTreeMap;

use super::{Crossing, DiagramError, KnotDiagram, Sign};

#[derive(Clone, Copy)]
struct Visit {
    over: bool,
    crossing: u64,
    sign: Sign,
}

/// Parses a signed Gauss code such as `O1+U2+O3+U1+O2+U3+`.
///
/// Each visit is `O` or `U`, a crossing number and the crossing's sign (`+`, `-` or `−`);
/// visits may be separated by whitespace or commas. Every crossing number must occur once
/// over and once under with the same sign. Arcs are numbered in traversal order with arc 1
/// containing the start of the code, and crossings are ordered by crossing number.
pub fn parse_gauss(text: &str) -> Result<KnotDiagram, DiagramError> {
    let visits = lex(text)?;
    if visits.is_empty() {
        return Ok(KnotDiagram::unknot());
    }

    // crossing number -> [over visit, under visit] positions in the sequence
    let mut slots: BTreeMap<u64, [Option<usize>; 2]> = BTreeMap::new();
    for (t, v) in visits.iter().enumerate() {
        let slot = &mut slots.entry(v.crossing).or_default()[usize::from(!v.over)];
        if slot.is_some() {
            return Err(DiagramError::BadIncidence(format!(
                "crossing {} is visited {} more than once",
                v.crossing,
                if v.over { "over" } else { "under" }
            )));
        }
        *slot = Some(t);
    }

    let n = slots.len();
    if visits.len() != 2 * n {
        let (k, _) = slots
            .iter()
            .find(|(_, s)| s[0].is_none() || s[1].is_none())
            .expect("some crossing is incomplete");
        return Err(DiagramError::BadIncidence(format!(
            "crossing {k} needs one over and one under visit"
        )));
    }

    // arc of the segment arriving at visit t: one more than the under-visits before it
    let mut arc_before = Vec::with_capacity(visits.len() + 1);
    let mut arc = 1;
    for v in &visits {
        arc_before.push(arc);
        if !v.over {
            arc += 1;
        }
    }
    let wrap = |a: usize| (a - 1) % n + 1;

    let mut crossings = Vec::with_capacity(n);
    for (&k, slot) in &slots {
        let (o, u) = (slot[0].expect("checked"), slot[1].expect("checked"));
        if visits[o].sign != visits[u].sign {
            return Err(DiagramError::SignMismatch { crossing: k });
        }
        crossings.push(Crossing::new(
            arc_before[o],
            arc_before[u],
            wrap(arc_before[u] + 1),
            visits[o].sign,
        ));
    }
    KnotDiagram::new(n, crossings)
}

fn lex(text: &str) -> Result<Vec<Visit>, DiagramError> {
    let mut out = Vec::new();
    let mut it = text.char_indices().peekable();
    while let Some((offset, c)) = it.next() {
        let over = match c {
            c if c.is_whitespace() || c == ',' => continue,
            'O' | 'o' => true,
            'U' | 'u' => false,
            other => {
                return Err(DiagramError::syntax(
                    offset,
                    format!("expected 'O' or 'U', found '{other}'"),
                ))
            }
        };
        let mut digits = String::new();
        while let Some(&(_, d)) = it.peek() {
            if !d.is_ascii_digit() {
                break;
            }
            digits.push(d);
            it.next();
        }
        let crossing = match digits.parse::<u64>() {
            Ok(k) if k > 0 => k,
            _ => {
                return Err(DiagramError::syntax(
                    offset,
                    "expected a positive crossing number",
                ))
            }
        };
        let sign = match it.next() {
            Some((_, '+')) => Sign::Positive,
            Some((_, '-' | '−')) => Sign::Negative,
            Some((p, _)) => return Err(DiagramError::syntax(p, "expected a sign '+' or '-'")),
            None => return Err(DiagramError::syntax(text.len(), "missing crossing sign")),
        };
        out.push(Visit {
            over,
            crossing,
            sign,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse_pd;

    #[test]
    fn trefoil() {
        let d = parse_gauss("O1+U2+O3+U1+O2+U3+").unwrap();
        assert_eq!(d.arc_count(), 3);
        assert!(d.crossings().iter().all(|c| c.sign() == Sign::Positive));
        assert_eq!(d.crossings()[0], Crossing::new(1, 2, 3, Sign::Positive));
        assert_eq!(d.crossings()[1], Crossing::new(3, 1, 2, Sign::Positive));
        assert_eq!(d.crossings()[2], Crossing::new(2, 3, 1, Sign::Positive));
    }

    #[test]
    fn smallest_code() {
        let d = parse_gauss("O1+U1+").unwrap();
        assert_eq!(d.arc_count(), 1);
        assert_eq!(d.crossings(), &[Crossing::new(1, 1, 1, Sign::Positive)]);
    }

    #[test]
    fn errors() {
        assert!(matches!(
            parse_gauss("O1+U1-"),
            Err(DiagramError::SignMismatch { crossing: 1 })
        ));
        assert!(matches!(
            parse_gauss("O1+O1+"),
            Err(DiagramError::BadIncidence(_))
        ));
        assert!(matches!(
            parse_gauss("O1+U2+"),
            Err(DiagramError::BadIncidence(_))
        ));
        for bad in ["X1+", "O+", "O1", "O1*U1+", "O0+U0+"] {
            assert!(
                matches!(parse_gauss(bad), Err(DiagramError::MalformedSyntax { .. })),
                "{bad}"
            );
        }
    }

    #[test]
    fn separators_and_unicode_minus() {
        let a = parse_gauss("O1-U2-O3-U1-O2-U3-").unwrap();
        let b = parse_gauss("O1−, U2−, O3−, U1−, O2−, U3−").unwrap();
        assert_eq!(a, b);
        assert_eq!(parse_gauss("  ").unwrap(), KnotDiagram::unknot());
    }

    #[test]
    fn round_trips_with_pd() {
        let d = parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)").unwrap();
        assert_eq!(parse_gauss(&d.to_gauss()).unwrap(), d);
        assert_eq!(parse_pd(&d.to_pd()).unwrap(), d);
    }
}
