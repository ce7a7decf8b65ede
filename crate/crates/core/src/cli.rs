//! Command implementations behind the `knotforge` binary.
//!
//! Each command builds an [`InvariantReport`], which renders either as text or as JSON
//! with a fixed field order so repeated runs are byte-identical.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use serde::Serialize;
use thiserror::Error;

use crate::diagram::{parse_gauss, parse_pd, DiagramError, KnotDiagram};
use crate::fpgroup::{abelianization, fox_colorings, tietze_simplify, AbelianGroup};
use crate::fpgroup::{Presentation, StructuredPresentation};
use crate::homology::{knot_homology, presentation_homology};
use crate::json::Integer;
use crate::manifold::{close_manifold, HeegaardDiagram, ManifoldError};
use crate::table::{KnotTable, TableError};
use crate::wirtinger::{drop_redundant_relator, wirtinger_presentation};

pub const DEFAULT_COLORINGS: [u32; 3] = [3, 5, 7];

/// Errors a user can cause; all map to exit code 2.
#[derive(Debug, Error)]
pub enum InputError {
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Table(#[from] TableError),
    #[error(transparent)]
    Manifold(#[from] ManifoldError),
    #[error("cannot read {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
}

/// Where a knot comes from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KnotInput {
    Name(String),
    Pd(String),
    Gauss(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Source {
    pub kind: &'static str,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantReport {
    pub source: Source,
    pub pi1: Presentation,
    pub pi1_simplified: Presentation,
    pub h0: AbelianGroup,
    pub h1: AbelianGroup,
    /// Absent for closed manifolds, whose presentation complex misses the 3-cell.
    pub h2: Option<AbelianGroup>,
    /// Fox coloring counts by modulus, for knot inputs.
    pub colorings: Option<BTreeMap<u32, BigInt>>,
}

#[derive(Serialize)]
struct JsonReport<'a> {
    source: &'a Source,
    pi1: StructuredPresentation,
    pi1_simplified: StructuredPresentation,
    h0: &'a AbelianGroup,
    h1: &'a AbelianGroup,
    #[serde(skip_serializing_if = "Option::is_none")]
    h2: Option<&'a AbelianGroup>,
    #[serde(skip_serializing_if = "Option::is_none")]
    colorings: Option<BTreeMap<u32, Integer<'a>>>,
}

impl InvariantReport {
    pub fn to_json(&self) -> String {
        let j = JsonReport {
            source: &self.source,
            pi1: self.pi1.structured(),
            pi1_simplified: self.pi1_simplified.structured(),
            h0: &self.h0,
            h1: &self.h1,
            h2: self.h2.as_ref(),
            colorings: self
                .colorings
                .as_ref()
                .map(|m| m.iter().map(|(&n, c)| (n, Integer(c))).collect()),
        };
        let mut s = serde_json::to_string_pretty(&j).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "source: {} {}", self.source.kind, self.source.value);
        let _ = writeln!(s, "pi1 = {}", self.pi1);
        let _ = writeln!(s, "pi1 (simplified) = {}", self.pi1_simplified);
        let _ = writeln!(s, "H0 = {}", self.h0);
        let _ = writeln!(s, "H1 = {}", self.h1);
        if let Some(h2) = &self.h2 {
            let _ = writeln!(s, "H2 = {h2}");
        }
        if let Some(cols) = &self.colorings {
            for (n, c) in cols {
                let _ = writeln!(s, "{n}-colorings = {c}");
            }
        }
        s
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.to_text(),
            Format::Json => self.to_json(),
        }
    }
}

/// Resolves a knot input to a diagram and the source descriptor for its report.
pub fn resolve_knot(
    input: &KnotInput,
    table: &KnotTable,
) -> Result<(KnotDiagram, Source), InputError> {
    Ok(match input {
        KnotInput::Name(name) => (
            table.diagram(name)?,
            Source {
                kind: "table",
                value: name.clone(),
            },
        ),
        KnotInput::Pd(code) => (
            parse_pd(code)?,
            Source {
                kind: "pd",
                value: code.clone(),
            },
        ),
        KnotInput::Gauss(code) => (
            parse_gauss(code)?,
            Source {
                kind: "gauss",
                value: code.clone(),
            },
        ),
    })
}

/// Full knot-complement pipeline: Wirtinger presentation with its redundant relator
/// dropped, a Tietze-simplified form, homology and Fox coloring counts.
pub fn knot_report(d: &KnotDiagram, source: Source, colorings: &[u32]) -> InvariantReport {
    let full = wirtinger_presentation(d);
    let pi1 = drop_redundant_relator(&full).unwrap_or(full);
    let pi1_simplified = tietze_simplify(&pi1);
    let h = knot_homology(d);
    debug_assert_eq!(abelianization(&pi1_simplified), h.h1);
    InvariantReport {
        source,
        pi1,
        pi1_simplified,
        h0: h.h0,
        h1: h.h1,
        h2: Some(h.h2),
        colorings: Some(
            colorings
                .iter()
                .map(|&n| (n, fox_colorings(d, n)))
                .collect(),
        ),
    }
}

pub fn cmd_knot(
    input: &KnotInput,
    colorings: &[u32],
    table: &KnotTable,
) -> Result<InvariantReport, InputError> {
    let (d, source) = resolve_knot(input, table)?;
    Ok(knot_report(&d, source, colorings))
}

pub fn heegaard_report(h: &HeegaardDiagram, source: Source) -> InvariantReport {
    let pi1 = close_manifold(h);
    let pi1_simplified = tietze_simplify(&pi1);
    let hom = presentation_homology(&pi1);
    InvariantReport {
        source,
        pi1,
        pi1_simplified,
        h0: hom.h0,
        h1: hom.h1,
        h2: None,
        colorings: None,
    }
}

pub fn cmd_heegaard(path: &Path) -> Result<InvariantReport, InputError> {
    let text = read(path)?;
    let h: HeegaardDiagram = text.parse()?;
    Ok(heegaard_report(
        &h,
        Source {
            kind: "heegaard",
            value: path.display().to_string(),
        },
    ))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TableAction {
    List,
    Show(String),
}

pub fn cmd_table(action: &TableAction, table: &KnotTable) -> Result<String, InputError> {
    match action {
        TableAction::List => Ok(table.names().map(|n| format!("{n}\n")).collect()),
        TableAction::Show(name) => Ok(format!("{}\n", table.code(name)?)),
    }
}

/// The bundled table, or the one at `path`.
pub fn load_table(path: Option<&Path>) -> Result<KnotTable, InputError> {
    match path {
        None => Ok(KnotTable::bundled()),
        Some(p) => Ok(KnotTable::parse(&read(p)?)?),
    }
}

fn read(path: &Path) -> Result<String, InputError> {
    std::fs::read_to_string(path).map_err(|source| InputError::Io {
        path: path.to_path_buf(),
        source,
    })
}
