//! On-disk formats: graph JSON, labeling JSON, grid CSV and DOT.
//!
//! Every writer is deterministic: edges are emitted as `u < v` in
//! lexicographic order and numbers are plain integers.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::labeling::{grid_view, Labeling};

#[derive(Debug, Serialize, Deserialize)]
struct GraphDoc {
    vertex_count: usize,
    edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    coords: Option<Vec<[usize; 2]>>,
}

pub fn graph_to_json(g: &Graph) -> String {
    let doc = GraphDoc {
        vertex_count: g.vertex_count(),
        edges: g.edges().map(|(u, v)| [u, v]).collect(),
        coords: g
            .coords()
            .map(|cs| cs.iter().map(|&(i, j)| [i, j]).collect()),
    };
    serde_json::to_string(&doc).expect("graph serializes")
}

pub fn graph_from_json(s: &str) -> Result<Graph> {
    let doc: GraphDoc = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    let g = Graph::from_edges(doc.vertex_count, doc.edges.into_iter().map(|[u, v]| (u, v)))?;
    match doc.coords {
        Some(cs) => g.with_coords(cs.into_iter().map(|[i, j]| (i, j)).collect()),
        None => Ok(g),
    }
}

pub fn graph_to_dot(g: &Graph) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.vertex_count() {
        let label = match g.coords() {
            Some(cs) => format!("{},{}", cs[v].0, cs[v].1),
            None => v.to_string(),
        };
        writeln!(out, "  {v} [label=\"{label}\"];").unwrap();
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}

pub fn labeling_to_json(f: &Labeling) -> String {
    serde_json::to_string(f).expect("labeling serializes")
}

pub fn labeling_from_json(s: &str) -> Result<Labeling> {
    serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
}

/// `m` lines of `n` comma-separated labels; line `i` is base index `i`.
pub fn labeling_to_grid_csv(f: &Labeling, m: usize, n: usize) -> Result<String> {
    let mut out = String::new();
    for row in grid_view(f, m, n)? {
        let cells: Vec<String> = row.iter().map(u32::to_string).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    Ok(out)
}

/// Parses a grid CSV back into a row-major labeling, returning `(f, m, n)`.
pub fn labeling_from_grid_csv(s: &str) -> Result<(Labeling, usize, usize)> {
    let mut labels = Vec::new();
    let mut rows = 0;
    let mut cols = None;
    for line in s.lines().filter(|l| !l.trim().is_empty()) {
        let row = line
            .split(',')
            .map(|c| {
                c.trim()
                    .parse::<u32>()
                    .map_err(|e| Error::Parse(format!("bad label {c:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if *cols.get_or_insert(row.len()) != row.len() {
            return Err(Error::Parse(format!("row {rows} has {} cells", row.len())));
        }
        labels.extend(row);
        rows += 1;
    }
    Ok((Labeling::new(labels), rows, cols.unwrap_or(0)))
}

/// Reads a labeling from either its JSON form or a grid CSV.
pub fn labeling_from_str(s: &str) -> Result<Labeling> {
    if s.trim_start().starts_with('{') {
        labeling_from_json(s)
    } else {
        labeling_from_grid_csv(s).map(|(f, _, _)| f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bundle::{make_bundle, BundleSpec};
    use crate::graph::{is_isomorphic_edge_set, make_complete, make_path};

    #[test]
    fn graph_json_shape() {
        let p3 = make_path(3).unwrap();
        assert_eq!(
            graph_to_json(&p3),
            r#"{"vertex_count":3,"edges":[[0,1],[1,2]]}"#
        );
        let g = make_bundle(&BundleSpec::shifted(3, 3, 0).unwrap()).unwrap();
        let json = graph_to_json(&g);
        assert!(json.contains(r#""coords":[[0,0],[0,1],[0,2],[1,0]"#));
        let back = graph_from_json(&json).unwrap();
        assert!(is_isomorphic_edge_set(&g, &back));
        assert_eq!(back, g);
    }

    #[test]
    fn graph_json_errors() {
        assert!(matches!(graph_from_json("{"), Err(Error::Parse(_))));
        assert_eq!(
            graph_from_json(r#"{"vertex_count":2,"edges":[[0,0]]}"#),
            Err(Error::SelfLoop(0))
        );
    }

    #[test]
    fn dot_output() {
        let dot = graph_to_dot(&make_complete(3).unwrap());
        assert_eq!(
            dot,
            "graph G {\n  0 [label=\"0\"];\n  1 [label=\"1\"];\n  2 [label=\"2\"];\n  0 -- 1;\n  0 -- 2;\n  1 -- 2;\n}\n"
        );
        let g = make_bundle(&BundleSpec::shifted(3, 3, 0).unwrap()).unwrap();
        let dot = graph_to_dot(&g);
        assert!(dot.contains("  5 [label=\"1,2\"];"));
        assert_eq!(dot.matches(" -- ").count(), 36);
    }

    #[test]
    fn labeling_formats() {
        let f = Labeling::new(vec![0, 2, 5, 7]);
        assert_eq!(labeling_to_json(&f), r#"{"labels":[0,2,5,7]}"#);
        assert_eq!(labeling_from_str(r#"{"labels":[0,2,5,7]}"#), Ok(f.clone()));
        let csv = labeling_to_grid_csv(&f, 2, 2).unwrap();
        assert_eq!(csv, "0,2\n5,7\n");
        assert_eq!(labeling_from_grid_csv(&csv), Ok((f.clone(), 2, 2)));
        assert_eq!(labeling_from_str(&csv), Ok(f));
        assert!(labeling_from_grid_csv("1,2\n3\n").is_err());
        assert!(labeling_from_grid_csv("1,x\n").is_err());
    }
}
