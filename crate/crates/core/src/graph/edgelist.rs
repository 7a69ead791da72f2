use super::{Graph, GraphError};

/// Parses the line-oriented edge-list format.
///
/// ```text
/// # optional comments
/// n 8          <- optional header fixing the vertex count
/// 1 2
/// 2 3
/// ```
///
/// Labels are 1-based. Without a header, `n` is the largest label seen.
/// Repeated edges are merged.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut declared: Option<usize> = None;
    let mut edges: Vec<(usize, usize, usize)> = Vec::new();
    let mut max_label = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens[0] == "n" {
            if declared.is_some() || !edges.is_empty() {
                return Err(GraphError::Parse {
                    line: line_no,
                    token: line.to_string(),
                    reason: "header must precede all edges and appear once",
                });
            }
            if tokens.len() != 2 {
                return Err(GraphError::Parse {
                    line: line_no,
                    token: line.to_string(),
                    reason: "expected `n <count>`",
                });
            }
            let n: usize = tokens[1].parse().map_err(|_| GraphError::Parse {
                line: line_no,
                token: tokens[1].to_string(),
                reason: "vertex count must be a non-negative integer",
            })?;
            declared = Some(n);
            continue;
        }
        if tokens.len() != 2 {
            return Err(GraphError::Parse {
                line: line_no,
                token: line.to_string(),
                reason: "expected two vertex labels",
            });
        }
        let u = parse_label(tokens[0], line_no)?;
        let v = parse_label(tokens[1], line_no)?;
        if u == v {
            return Err(GraphError::Loop {
                line: line_no,
                label: u,
            });
        }
        if let Some(n) = declared {
            for label in [u, v] {
                if label > n {
                    return Err(GraphError::Range { label, n });
                }
            }
        }
        max_label = max_label.max(u).max(v);
        edges.push((line_no, u, v));
    }

    let n = declared.unwrap_or(max_label);
    let mut g = Graph::empty(n)?;
    for (_, u, v) in edges {
        g.add_edge(u - 1, v - 1);
    }
    Ok(g)
}

fn parse_label(token: &str, line: usize) -> Result<usize, GraphError> {
    let value: usize = token.parse().map_err(|_| GraphError::Parse {
        line,
        token: token.to_string(),
        reason: "not a non-negative integer",
    })?;
    if value == 0 {
        return Err(GraphError::Parse {
            line,
            token: token.to_string(),
            reason: "labels are 1-based",
        });
    }
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_on_three() {
        let g = parse_edge_list("1 2\n2 3").unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.size(), 2);
        assert_eq!(g.degree_sequence().as_slice(), &[2, 1, 1]);
    }

    #[test]
    fn loop_is_rejected() {
        let err = parse_edge_list("1 1").unwrap_err();
        assert!(matches!(err, GraphError::Loop { line: 1, label: 1 }));
        assert!(err.to_string().contains("loop not allowed"));
    }

    #[test]
    fn header_comments_and_duplicates() {
        let g = parse_edge_list("# a comment\nn 5\n\n1 2\n2 1\n  3 4  \n").unwrap();
        assert_eq!(g.order(), 5);
        assert_eq!(g.size(), 2);
        assert_eq!(g.degree(4), 0);
    }

    #[test]
    fn errors() {
        assert!(matches!(
            parse_edge_list("1 x"),
            Err(GraphError::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_edge_list("1 2 3"),
            Err(GraphError::Parse { .. })
        ));
        assert!(matches!(
            parse_edge_list("n 3\n1 4"),
            Err(GraphError::Range { label: 4, n: 3 })
        ));
        assert!(matches!(
            parse_edge_list("1 2\nn 3"),
            Err(GraphError::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("-1 2"),
            Err(GraphError::Parse { .. })
        ));
        assert!(matches!(
            parse_edge_list("0 2"),
            Err(GraphError::Parse { .. })
        ));
        assert_eq!(parse_edge_list("# nothing"), Err(GraphError::Empty));
        assert_eq!(parse_edge_list("n 0"), Err(GraphError::Empty));
    }
}
