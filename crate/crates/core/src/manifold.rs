//! Handlebodies and Heegaard diagrams.
//!
//! The genus-`g` handlebody has free fundamental group on `g` generators, one per
//! 1-handle. Attaching a 2-handle along a curve on its boundary quotients that group by
//! the normal closure of the curve's class, so a Heegaard diagram presents the closed
//! (or partially closed) manifold by one relator per attaching curve. Curves are given
//! directly as words in the handlebody's free group.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::fpgroup::{abelianization, AbelianGroup, Presentation, Word};
use crate::homology::{presentation_homology, KnotHomology};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ManifoldError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("curve {curve} uses generator {generator} but the genus is {genus}")]
    GeneratorOutOfRange {
        curve: usize,
        generator: usize,
        genus: usize,
    },
}

/// Genus plus attaching curves, each freely and cyclically reduced.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HeegaardDiagram {
    genus: usize,
    curves: Vec<Word>,
}

impl HeegaardDiagram {
    /// Curves are replaced by their cyclic reductions, which represent the same attaching
    /// loop up to free homotopy.
    pub fn new(genus: usize, curves: Vec<Word>) -> Result<Self, ManifoldError> {
        for (i, c) in curves.iter().enumerate() {
            if c.max_generator() > genus {
                return Err(ManifoldError::GeneratorOutOfRange {
                    curve: i + 1,
                    generator: c.max_generator(),
                    genus,
                });
            }
        }
        Ok(HeegaardDiagram {
            genus,
            curves: curves.iter().map(Word::cyclic_reduce).collect(),
        })
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn curves(&self) -> &[Word] {
        &self.curves
    }
}

/// Text format: a `genus g` line, then one curve per line such as `a a` or
/// `a b a^-1 b^-1`. Blank lines and `#` comments are ignored.
impl FromStr for HeegaardDiagram {
    type Err = ManifoldError;

    fn from_str(s: &str) -> Result<Self, ManifoldError> {
        let mut genus = None;
        let mut curves = Vec::new();
        for (i, raw) in s.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            match genus {
                None => {
                    let value = line.strip_prefix("genus").map(str::trim).ok_or_else(|| {
                        ManifoldError::Syntax {
                            line: line_no,
                            message: format!("expected `genus <g>`, found \"{line}\""),
                        }
                    })?;
                    genus = Some(value.parse::<usize>().map_err(|_| ManifoldError::Syntax {
                        line: line_no,
                        message: format!("bad genus \"{value}\""),
                    })?);
                }
                Some(_) => {
                    let w = Word::parse(line).map_err(|e| ManifoldError::Syntax {
                        line: line_no,
                        message: e.to_string(),
                    })?;
                    curves.push(w);
                }
            }
        }
        let genus = genus.ok_or(ManifoldError::Syntax {
            line: 1,
            message: "missing `genus <g>` line".into(),
        })?;
        HeegaardDiagram::new(genus, curves)
    }
}

impl fmt::Display for HeegaardDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "genus {}", self.genus)?;
        for c in &self.curves {
            writeln!(f, "{}", c.display())?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HandlebodyInvariants {
    pub pi1: Presentation,
    pub h0: AbelianGroup,
    pub h1: AbelianGroup,
    pub h2: AbelianGroup,
}

/// Free `π_1` of rank `g` and the homology of the genus-`g` handlebody, computed from
/// the free presentation complex (a wedge of `g` circles).
pub fn handlebody_invariants(genus: usize) -> HandlebodyInvariants {
    let pi1 = Presentation::free(genus);
    let KnotHomology { h0, h1, h2 } = presentation_homology(&pi1);
    HandlebodyInvariants { pi1, h0, h1, h2 }
}

/// `π_1` after attaching one 2-handle per curve.
pub fn close_manifold(h: &HeegaardDiagram) -> Presentation {
    Presentation::new(h.genus, h.curves.clone())
        .expect("curve generators are validated by the diagram")
}

pub fn closed_manifold_h1(h: &HeegaardDiagram) -> AbelianGroup {
    abelianization(&close_manifold(h))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diagram(s: &str) -> HeegaardDiagram {
        s.parse().unwrap()
    }

    #[test]
    fn handlebodies() {
        let h = handlebody_invariants(3);
        assert_eq!(h.pi1.to_string(), "⟨a, b, c |⟩");
        assert_eq!(h.h0, AbelianGroup::free(1));
        assert_eq!(h.h1, AbelianGroup::free(3));
        assert!(h.h2.is_trivial());
        assert!(handlebody_invariants(0).h1.is_trivial());
        assert!(handlebody_invariants(1).h1.is_infinite_cyclic());
    }

    #[test]
    fn projective_space() {
        let h = diagram("genus 1\na a\n");
        let p = close_manifold(&h);
        assert_eq!(p.to_string(), "⟨a | a a⟩");
        let h1 = closed_manifold_h1(&h);
        assert_eq!((h1.rank(), h1.torsion_u64()), (0, vec![2]));
    }

    #[test]
    fn sphere_and_solid_torus() {
        assert!(closed_manifold_h1(&diagram("genus 1\na")).is_trivial());
        assert!(closed_manifold_h1(&diagram("genus 1")).is_infinite_cyclic());
    }

    #[test]
    fn commutator_curve() {
        let h1 = closed_manifold_h1(&diagram("genus 2\na b a^-1 b^-1"));
        assert_eq!(h1, AbelianGroup::free(2));
    }

    #[test]
    fn lens_space_curve() {
        // a^5: H1 = Z/5
        let h1 = closed_manifold_h1(&diagram("# L(5,1)\ngenus 1\n\na^5 # five times around\n"));
        assert_eq!(h1.torsion_u64(), vec![5]);
    }

    #[test]
    fn curves_cyclically_reduced() {
        let h = diagram("genus 2\nb a a b^-1");
        assert_eq!(h.curves()[0], Word::parse("a a").unwrap());
        assert_eq!(h.to_string(), "genus 2\na a\n");
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            "a a".parse::<HeegaardDiagram>(),
            Err(ManifoldError::Syntax { line: 1, .. })
        ));
        assert!(matches!(
            "genus x".parse::<HeegaardDiagram>(),
            Err(ManifoldError::Syntax { .. })
        ));
        assert!(matches!(
            "".parse::<HeegaardDiagram>(),
            Err(ManifoldError::Syntax { .. })
        ));
        assert!(matches!(
            "genus 1\na b".parse::<HeegaardDiagram>(),
            Err(ManifoldError::GeneratorOutOfRange {
                curve: 1,
                generator: 2,
                genus: 1
            })
        ));
        assert!(matches!(
            "genus 1\na + a".parse::<HeegaardDiagram>(),
            Err(ManifoldError::Syntax { line: 2, .. })
        ));
    }
}
