//! TSPLIB95 EUC_2D instances: parsing, rounded-Euclidean distance matrices,
//! nearest-neighbor tours, and the registry of known optimal tour lengths.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::tour::Tour;

/// A parsed symmetric EUC_2D instance.
#[derive(Debug, Clone, PartialEq)]
pub struct TspInstance {
    pub name: String,
    pub dimension: usize,
    /// City coordinates, indexed 0-based (TSPLIB 1-based ids are remapped).
    pub coords: Vec<(f64, f64)>,
}

/// Full matrix of rounded-Euclidean distances. Symmetric, zero diagonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

/// TSPLIB nint: round half up.
fn nint(x: f64) -> u32 {
    (x + 0.5).floor() as u32
}

/// Rounded Euclidean distance between two points (TSPLIB EUC_2D).
pub fn euc2d_distance(a: (f64, f64), b: (f64, f64)) -> u32 {
    let dx = a.0 - b.0;
    let dy = a.1 - b.1;
    nint((dx * dx + dy * dy).sqrt())
}

/// Parse a TSPLIB95 document. Only TYPE TSP with EDGE_WEIGHT_TYPE EUC_2D is
/// accepted; node ids are remapped from 1-based to 0-based.
///
/// `origin` names the input in error messages (a path, or e.g. "<string>").
pub fn parse_instance(text: &str, origin: &str) -> Result<TspInstance> {
    let err = |line: usize, message: String| Error::Parse {
        path: origin.to_string(),
        line,
        message,
    };

    let mut name: Option<String> = None;
    let mut dimension: Option<usize> = None;
    let mut edge_weight_type: Option<String> = None;
    let mut coords: Vec<Option<(f64, f64)>> = Vec::new();
    let mut in_coords = false;
    let mut coord_rows = 0usize;

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if line == "EOF" {
            break;
        }

        if in_coords {
            let mut it = line.split_whitespace();
            let id: usize = it
                .next()
                .unwrap()
                .parse()
                .map_err(|_| err(lineno, format!("bad node id in '{line}'")))?;
            let x: f64 = it
                .next()
                .ok_or_else(|| err(lineno, format!("missing x coordinate in '{line}'")))?
                .parse()
                .map_err(|_| err(lineno, format!("bad x coordinate in '{line}'")))?;
            let y: f64 = it
                .next()
                .ok_or_else(|| err(lineno, format!("missing y coordinate in '{line}'")))?
                .parse()
                .map_err(|_| err(lineno, format!("bad y coordinate in '{line}'")))?;
            if !(x.is_finite() && y.is_finite()) {
                return Err(err(lineno, format!("non-finite coordinate in '{line}'")));
            }
            let n = coords.len();
            if id == 0 || id > n {
                return Err(err(
                    lineno,
                    format!("node id {id} outside 1..={n} in '{line}'"),
                ));
            }
            if coords[id - 1].is_some() {
                return Err(err(lineno, format!("duplicate node id {id}")));
            }
            coords[id - 1] = Some((x, y));
            coord_rows += 1;
            continue;
        }

        // Keyword line: either "KEY : VALUE" or a bare section keyword.
        let (key, value) = match line.split_once(':') {
            Some((k, v)) => (k.trim(), v.trim()),
            None => (line, ""),
        };
        match key {
            "NAME" => name = Some(value.to_string()),
            "TYPE" => {
                if value != "TSP" && !value.starts_with("TSP ") {
                    return Err(err(lineno, format!("unsupported TYPE '{value}'")));
                }
            }
            "DIMENSION" => {
                let n: usize = value
                    .parse()
                    .map_err(|_| err(lineno, format!("bad DIMENSION '{value}'")))?;
                if n < 3 {
                    return Err(err(lineno, format!("DIMENSION {n} is below the minimum of 3")));
                }
                dimension = Some(n);
            }
            "EDGE_WEIGHT_TYPE" => {
                if value != "EUC_2D" {
                    return Err(err(
                        lineno,
                        format!("unsupported EDGE_WEIGHT_TYPE '{value}' (only EUC_2D)"),
                    ));
                }
                edge_weight_type = Some(value.to_string());
            }
            "NODE_COORD_SECTION" => {
                let n = dimension
                    .ok_or_else(|| err(lineno, "NODE_COORD_SECTION before DIMENSION".into()))?;
                coords = vec![None; n];
                in_coords = true;
            }
            // COMMENT and other optional keywords are ignored.
            _ => {}
        }
    }

    let name = name.ok_or_else(|| err(0, "missing NAME".into()))?;
    let dimension = dimension.ok_or_else(|| err(0, "missing DIMENSION".into()))?;
    edge_weight_type.ok_or_else(|| err(0, "missing EDGE_WEIGHT_TYPE".into()))?;
    if coord_rows != dimension {
        return Err(err(
            0,
            format!("DIMENSION is {dimension} but found {coord_rows} coordinate rows"),
        ));
    }
    let coords: Vec<(f64, f64)> = coords.into_iter().map(|c| c.unwrap()).collect();

    Ok(TspInstance {
        name,
        dimension,
        coords,
    })
}

/// Read and parse an instance file.
pub fn load_instance(path: &Path) -> Result<TspInstance> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_instance(&text, &path.display().to_string())
}

impl TspInstance {
    /// Render back to TSPLIB95 text. Reparsing the output yields an
    /// identical instance (coordinates use shortest round-trip formatting).
    pub fn to_tsplib_string(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "NAME : {}", self.name);
        let _ = writeln!(out, "TYPE : TSP");
        let _ = writeln!(out, "DIMENSION : {}", self.dimension);
        let _ = writeln!(out, "EDGE_WEIGHT_TYPE : EUC_2D");
        let _ = writeln!(out, "NODE_COORD_SECTION");
        for (i, (x, y)) in self.coords.iter().enumerate() {
            let _ = writeln!(out, "{} {} {}", i + 1, x, y);
        }
        out.push_str("EOF\n");
        out
    }
}

/// Build the full distance matrix for an instance.
pub fn build_distance_matrix(instance: &TspInstance) -> DistanceMatrix {
    let n = instance.dimension;
    let mut d = vec![0u32; n * n];
    for r in 0..n {
        for s in (r + 1)..n {
            let dist = euc2d_distance(instance.coords[r], instance.coords[s]);
            d[r * n + s] = dist;
            d[s * n + r] = dist;
        }
    }
    DistanceMatrix { n, d }
}

impl DistanceMatrix {
    /// Build directly from an explicit symmetric matrix (test helper).
    pub fn from_rows(rows: &[Vec<u32>]) -> Result<Self> {
        let n = rows.len();
        let mut d = vec![0u32; n * n];
        for (r, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::SizeMismatch {
                    expected: n,
                    found: row.len(),
                });
            }
            for (s, &v) in row.iter().enumerate() {
                d[r * n + s] = v;
            }
        }
        let m = Self { n, d };
        for r in 0..n {
            for s in 0..n {
                if m.dist(r, s) != m.dist(s, r) || (r == s && m.dist(r, s) != 0) {
                    return Err(Error::InvalidParam(format!(
                        "matrix not symmetric with zero diagonal at ({r},{s})"
                    )));
                }
            }
        }
        Ok(m)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn dist(&self, r: usize, s: usize) -> u32 {
        self.d[r * self.n + s]
    }

    /// Rejects coincident distinct cities (rounded distance 0), which would
    /// make the transition rule singular.
    pub fn check_positive_off_diagonal(&self) -> Result<()> {
        for r in 0..self.n {
            for s in (r + 1)..self.n {
                if self.dist(r, s) == 0 {
                    return Err(Error::ZeroDistance { r, s });
                }
            }
        }
        Ok(())
    }

    /// Closed-loop length of a city sequence.
    pub fn tour_length(&self, order: &[u32]) -> u64 {
        if order.is_empty() {
            return 0;
        }
        let mut total = 0u64;
        for w in order.windows(2) {
            total += self.dist(w[0] as usize, w[1] as usize) as u64;
        }
        total += self.dist(order[order.len() - 1] as usize, order[0] as usize) as u64;
        total
    }
}

/// Greedy nearest-neighbor tour from `start`; ties go to the lowest index.
pub fn nearest_neighbor_tour(matrix: &DistanceMatrix, start: usize) -> Tour {
    let n = matrix.n();
    assert!(start < n, "start city {start} out of range 0..{n}");
    let mut visited = vec![false; n];
    let mut order = Vec::with_capacity(n);
    visited[start] = true;
    order.push(start as u32);
    let mut current = start;
    for _ in 1..n {
        let mut best: Option<(usize, u32)> = None;
        for s in 0..n {
            if !visited[s] {
                let d = matrix.dist(current, s);
                if best.map_or(true, |(_, bd)| d < bd) {
                    best = Some((s, d));
                }
            }
        }
        let (next, _) = best.unwrap();
        visited[next] = true;
        order.push(next as u32);
        current = next;
    }
    Tour::from_order(order, matrix)
}

/// Known optimal tour lengths for the nine benchmark instances.
const OPTIMA: [(&str, u64); 9] = [
    ("eil51", 426),
    ("eil78", 538),
    ("kroA100", 21282),
    ("d198", 15780),
    ("lin318", 42029),
    ("pcb442", 50778),
    ("rat783", 8806),
    ("fl1577", 22249),
    ("d2103", 80450),
];

/// Registered optimum for a benchmark instance name, if known.
pub fn known_optimum(name: &str) -> Option<u64> {
    OPTIMA.iter().find(|(k, _)| *k == name).map(|(_, v)| *v)
}
