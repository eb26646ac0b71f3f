//! The bundled classification catalogs: indecomposable non-abelian
//! two-step nilpotent Lie algebras in dimensions 3–7 and three-step ones
//! in dimensions 4–7, transcribed bracket-by-bracket into the interchange
//! format (one data file per dimension per class).
//!
//! Transcription fidelity has two guards: a canonical bracket listing
//! (`data/bracket_listing.txt`, reviewed against the source lists once)
//! that the test suite regenerates and compares byte for byte, and
//! machine verification of every entry. Verification reports rather than
//! corrects: if a transcribed entry fails the Jacobi identity, the report
//! says so and the discrepancy stands as published.

use crate::cohomology;
use crate::interchange::parse_algebra_list;
use crate::lie::StructureTensor;
use crate::parallel;
use crate::rational::{format_rational, qi, Rational};
use num_traits::Zero;
use serde::Serialize;

const TWO_STEP_FILES: &[(&str, &str)] = &[
    ("two_step_dim3", include_str!("../data/two_step_dim3.json")),
    ("two_step_dim5", include_str!("../data/two_step_dim5.json")),
    ("two_step_dim6", include_str!("../data/two_step_dim6.json")),
    ("two_step_dim7", include_str!("../data/two_step_dim7.json")),
];

const THREE_STEP_FILES: &[(&str, &str)] = &[
    ("three_step_dim4", include_str!("../data/three_step_dim4.json")),
    ("three_step_dim5", include_str!("../data/three_step_dim5.json")),
    ("three_step_dim6", include_str!("../data/three_step_dim6.json")),
    ("three_step_dim7", include_str!("../data/three_step_dim7.json")),
];

pub const BRACKET_LISTING: &str = include_str!("../data/bracket_listing.txt");

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: String,
    pub dim: usize,
    pub tensor: StructureTensor,
    /// 2 for the quadratic list, 3 for the cubic list.
    pub expected_nilindex: usize,
    /// The family parameter for the one-parameter entries.
    pub parameter: Option<Rational>,
}

fn parameter_from_name(name: &str) -> Option<Rational> {
    let suffix = name.strip_prefix("n7_117_alpha_")?;
    Some(match suffix {
        "m1" => qi(-1),
        s => qi(s.parse::<i64>().expect("alpha suffix is an integer")),
    })
}

/// Load every catalog entry from the bundled data files. The
/// one-parameter family appears instantiated at α ∈ {0, 1, −1, 2}.
pub fn load_catalog() -> Vec<CatalogEntry> {
    let mut entries = Vec::new();
    for (class, expected) in [(TWO_STEP_FILES, 2usize), (THREE_STEP_FILES, 3usize)] {
        for (file, json) in class {
            let parsed = parse_algebra_list(json)
                .unwrap_or_else(|e| panic!("DataCorrupt in bundled file {file}: {e}"));
            for (name, tensor) in parsed {
                let name = name.unwrap_or_else(|| panic!("DataCorrupt: unnamed entry in {file}"));
                entries.push(CatalogEntry {
                    parameter: parameter_from_name(&name),
                    dim: tensor.dim(),
                    tensor,
                    expected_nilindex: expected,
                    name,
                });
            }
        }
    }
    let mut names: Vec<&str> = entries.iter().map(|e| e.name.as_str()).collect();
    names.sort_unstable();
    names.dedup();
    assert_eq!(names.len(), entries.len(), "DataCorrupt: duplicate entry names");
    entries
}

/// The one-parameter dimension-7 family at an arbitrary parameter value.
pub fn n7_117_alpha(alpha: &Rational) -> StructureTensor {
    let mut t = StructureTensor::zero(7);
    let single = |k: usize| {
        let mut v = vec![Rational::zero(); 7];
        v[k] = qi(1);
        v
    };
    t.set_bracket(0, 1, single(2));
    t.set_bracket(0, 2, single(3));
    t.set_bracket(0, 4, single(5));
    t.set_bracket(1, 4, single(6));
    t.set_bracket(1, 6, single(3));
    t.set_bracket(4, 5, single(3));
    let mut v = vec![Rational::zero(); 7];
    v[3] = alpha.clone();
    t.set_bracket(4, 6, v);
    t
}

/// Per-entry verification report; failures are fields, not errors.
#[derive(Debug, Clone, Serialize)]
pub struct EntryReport {
    pub name: String,
    pub dim: usize,
    pub jacobi_ok: bool,
    pub nilindex: Option<usize>,
    pub expected_nilindex: usize,
    pub nilindex_matches_expected: bool,
    pub characteristic_sequence: Option<Vec<usize>>,
    pub char_seq_sampled: Option<bool>,
    pub central_series_dims: Option<Vec<usize>>,
}

pub fn verify_entry(entry: &CatalogEntry, samples: usize, seed: u64) -> EntryReport {
    let jacobi_ok = entry.tensor.jacobi_defect().is_empty();
    let nilindex = entry.tensor.nilindex().ok();
    let char_data = if jacobi_ok {
        entry.tensor.characteristic_data(samples, seed).ok()
    } else {
        None
    };
    let central = entry.tensor.lower_central_series().ok();
    EntryReport {
        name: entry.name.clone(),
        dim: entry.dim,
        jacobi_ok,
        nilindex,
        expected_nilindex: entry.expected_nilindex,
        nilindex_matches_expected: nilindex == Some(entry.expected_nilindex),
        characteristic_sequence: char_data
            .as_ref()
            .map(|d| d.sequence.parts.parts().to_vec()),
        char_seq_sampled: char_data.as_ref().map(|d| d.sampled),
        central_series_dims: central.map(|c| c.dims),
    }
}

/// Verify the whole catalog; entries are independent so this sweeps in
/// parallel, and the output is sorted by name regardless of schedule.
pub fn verify_all(samples: usize, seed: u64) -> Vec<EntryReport> {
    let entries = load_catalog();
    let mut reports = parallel::map_indexed(entries.len(), 2, |i| {
        verify_entry(&entries[i], samples, seed)
    });
    reports.sort_by(|a, b| a.name.cmp(&b.name));
    reports
}

/// One row of the invariant table. The cohomology column is only filled
/// for two-step entries (where it is the deformation cohomology).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub name: String,
    pub dim: usize,
    pub nilindex: Option<usize>,
    pub characteristic_sequence: Option<Vec<usize>>,
    pub central_series_dims: Option<Vec<usize>>,
    pub dim_h2: Option<usize>,
    /// Names of same-dimension entries this row does not differ from.
    pub not_separated_from: Vec<String>,
}

/// Deterministic invariant table over the full catalog, with pairs of
/// same-dimension entries that the computed invariants fail to separate
/// flagged on both rows. (Equal rows need not mean isomorphic algebras.)
pub fn invariant_table(samples: usize, seed: u64) -> Vec<TableRow> {
    let entries = load_catalog();
    let mut rows: Vec<TableRow> = parallel::map_indexed(entries.len(), 2, |i| {
        let entry = &entries[i];
        let lie = entry.tensor.jacobi_defect().is_empty();
        let nilindex = entry.tensor.nilindex().ok();
        let h2 = if lie && nilindex == Some(2) {
            cohomology::cohomology_dims_hc(&entry.tensor)
                .ok()
                .map(|r| r.dim_h2)
        } else {
            None
        };
        TableRow {
            name: entry.name.clone(),
            dim: entry.dim,
            nilindex,
            characteristic_sequence: if lie {
                entry
                    .tensor
                    .characteristic_data(samples, seed)
                    .ok()
                    .map(|d| d.sequence.parts.parts().to_vec())
            } else {
                None
            },
            central_series_dims: entry.tensor.lower_central_series().ok().map(|c| c.dims),
            dim_h2: h2,
            not_separated_from: Vec::new(),
        }
    });
    rows.sort_by(|a, b| a.name.cmp(&b.name));
    let key = |r: &TableRow| {
        (
            r.dim,
            r.nilindex,
            r.characteristic_sequence.clone(),
            r.central_series_dims.clone(),
            r.dim_h2,
        )
    };
    for a in 0..rows.len() {
        for b in (a + 1)..rows.len() {
            if rows[a].dim == rows[b].dim && key(&rows[a]) == key(&rows[b]) {
                let (name_a, name_b) = (rows[a].name.clone(), rows[b].name.clone());
                rows[a].not_separated_from.push(name_b);
                rows[b].not_separated_from.push(name_a);
            }
        }
    }
    rows
}

/// Canonical listing of every transcribed bracket: one line per entry,
/// brackets sorted, coefficients in the interchange string format. This is
/// the reviewed transcription record; tests compare it byte for byte
/// against `data/bracket_listing.txt`.
pub fn transcription_listing() -> String {
    let mut entries = load_catalog();
    entries.sort_by(|a, b| a.name.cmp(&b.name));
    let mut out = String::new();
    for entry in &entries {
        let mut line = format!("{} dim={} nilindex={}", entry.name, entry.dim, entry.expected_nilindex);
        for (&(i, j), value) in entry.tensor.brackets() {
            let terms: Vec<String> = value
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| format!("{}*X{}", format_rational(c), k + 1))
                .collect();
            line.push_str(&format!(" [X{},X{}]={}", i + 1, j + 1, terms.join("+")));
        }
        out.push_str(&line);
        out.push('\n');
    }
    out
}

/// Convenience: find a catalog entry by name.
pub fn entry(name: &str) -> Option<CatalogEntry> {
    load_catalog().into_iter().find(|e| e.name == name)
}
