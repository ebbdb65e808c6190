//! The `.mg` text exchange format.
//!
//! ```text
//! # comment lines may appear anywhere
//! n m
//! u v      (exactly m lines, 0-based, u == v is a loop)
//! ```
//!
//! Numbers are decimal and separated by a single space. Serialization always
//! ends with a newline; parsing accepts input with or without one.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Multigraph;

fn parse_pair(line: &str, lineno: usize) -> Result<(usize, usize)> {
    let err = |message: String| Error::Parse { line: lineno, message };
    let mut parts = line.split(' ');
    let (a, b) = match (parts.next(), parts.next(), parts.next()) {
        (Some(a), Some(b), None) => (a, b),
        _ => return Err(err(format!("expected two numbers separated by one space, got {line:?}"))),
    };
    let num = |s: &str| -> Result<usize> {
        if s.is_empty() || !s.bytes().all(|c| c.is_ascii_digit()) {
            return Err(err(format!("not a decimal number: {s:?}")));
        }
        s.parse::<usize>()
            .map_err(|e| err(format!("bad number {s:?}: {e}")))
    };
    Ok((num(a)?, num(b)?))
}

pub fn parse_multigraph(text: &[u8]) -> Result<Multigraph> {
    let text = std::str::from_utf8(text).map_err(|e| Error::Parse {
        line: 1 + text[..e.valid_up_to()].iter().filter(|&&c| c == b'\n').count(),
        message: "input is not valid UTF-8".into(),
    })?;

    let mut header: Option<(usize, usize)> = None;
    let mut graph = Multigraph::new(0);
    let mut last_line = 0;
    for (i, line) in text.lines().enumerate() {
        let lineno = i + 1;
        last_line = lineno;
        if line.starts_with('#') {
            continue;
        }
        let (a, b) = parse_pair(line, lineno)?;
        match header {
            None => {
                header = Some((a, b));
                graph = Multigraph::new(a);
            }
            Some((n, m)) => {
                if graph.edge_count() == m {
                    return Err(Error::Parse {
                        line: lineno,
                        message: format!("header declares {m} edges but more lines follow"),
                    });
                }
                for x in [a, b] {
                    if x >= n {
                        return Err(Error::Parse {
                            line: lineno,
                            message: format!("endpoint {x} out of range for {n} vertices"),
                        });
                    }
                }
                graph.add_edge(a, b);
            }
        }
    }
    match header {
        None => Err(Error::Parse {
            line: last_line + 1,
            message: "missing \"n m\" header".into(),
        }),
        Some((_, m)) if graph.edge_count() != m => Err(Error::Parse {
            line: last_line + 1,
            message: format!(
                "header declares {m} edges but only {} edge lines were found",
                graph.edge_count()
            ),
        }),
        Some(_) => Ok(graph),
    }
}

pub fn serialize_multigraph(g: &Multigraph) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", g.vertex_count(), g.edge_count()).unwrap();
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}
