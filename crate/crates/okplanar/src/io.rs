//! Text formats: `.cvx` convex drawings, PACE-style `.gr` graphs and `.td`
//! tree decompositions, `.sep` separations, and the planarization debug
//! export. All vertex ids are 1-based on disk and 0-based in memory.

use crate::decomp::TreeDecomposition;
use crate::drawing::ConvexDrawing;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::planarize::{GcVertex, Planarization};
use crate::separate::Separation;
use std::fmt::Write as _;

fn parse_usize(tok: &str, line: usize) -> Result<usize> {
    tok.parse::<usize>().map_err(|_| Error::Parse {
        line,
        msg: format!("expected a non-negative integer, got {tok:?}"),
    })
}

fn vertex_1based(tok: &str, n: usize, line: usize) -> Result<usize> {
    let v = parse_usize(tok, line)?;
    if v == 0 || v > n {
        return Err(Error::Parse {
            line,
            msg: format!("vertex {v} out of range 1..={n}"),
        });
    }
    Ok(v - 1)
}

/// Parses the `.cvx` format: `p cvx <n> <m>`, an optional cyclic-order line
/// `o p1 .. pn`, and `e u v` lines. Lines starting with `c` are comments.
pub fn parse_cvx(text: &str) -> Result<ConvexDrawing> {
    let mut n: Option<usize> = None;
    let mut m = 0usize;
    let mut order: Option<Vec<usize>> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let toks: Vec<&str> = raw.split_whitespace().collect();
        match toks.first() {
            None | Some(&"c") => continue,
            Some(&"p") => {
                if n.is_some() {
                    return Err(Error::Parse { line, msg: "duplicate p line".into() });
                }
                if toks.len() != 4 || toks[1] != "cvx" {
                    return Err(Error::Parse {
                        line,
                        msg: "expected `p cvx <n> <m>`".into(),
                    });
                }
                n = Some(parse_usize(toks[2], line)?);
                m = parse_usize(toks[3], line)?;
            }
            Some(&"o") => {
                let n = n.ok_or(Error::Parse { line, msg: "o line before p line".into() })?;
                if order.is_some() {
                    return Err(Error::Parse { line, msg: "duplicate o line".into() });
                }
                if toks.len() != n + 1 {
                    return Err(Error::Parse {
                        line,
                        msg: format!("order line needs {n} entries"),
                    });
                }
                let mut ord = Vec::with_capacity(n);
                for tok in &toks[1..] {
                    ord.push(vertex_1based(tok, n, line)?);
                }
                order = Some(ord);
            }
            Some(&"e") => {
                let n = n.ok_or(Error::Parse { line, msg: "e line before p line".into() })?;
                if toks.len() != 3 {
                    return Err(Error::Parse { line, msg: "expected `e <u> <v>`".into() });
                }
                let u = vertex_1based(toks[1], n, line)?;
                let v = vertex_1based(toks[2], n, line)?;
                if u == v {
                    return Err(Error::Parse { line, msg: format!("self-loop at {}", u + 1) });
                }
                edges.push(crate::graph::edge(u, v));
            }
            Some(other) => {
                return Err(Error::Parse {
                    line,
                    msg: format!("unknown line type {other:?}"),
                });
            }
        }
    }
    let n = n.ok_or(Error::Parse { line: 0, msg: "missing `p cvx` header".into() })?;
    if edges.len() != m {
        return Err(Error::Parse {
            line: 0,
            msg: format!("header promises {m} edges, found {}", edges.len()),
        });
    }
    {
        let mut sorted = edges.clone();
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Parse {
                line: 0,
                msg: format!("duplicate edge ({}, {})", w[0].0 + 1, w[0].1 + 1),
            });
        }
    }
    match order {
        Some(ord) => ConvexDrawing::with_order(n, edges, ord),
        None => ConvexDrawing::new(n, edges),
    }
    .map_err(|e| Error::Parse { line: 0, msg: e.to_string() })
}

/// Canonical `.cvx` writer: sorted edges, order line only when non-identity.
pub fn write_cvx(d: &ConvexDrawing) -> String {
    let mut out = String::new();
    writeln!(out, "p cvx {} {}", d.n(), d.m()).unwrap();
    if d.order().iter().enumerate().any(|(p, &v)| p != v) {
        out.push('o');
        for &v in d.order() {
            write!(out, " {}", v + 1).unwrap();
        }
        out.push('\n');
    }
    for &(u, v) in d.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}

/// Parses the PACE `.gr` format: `p tw <n> <m>` and `e u v` lines.
pub fn parse_gr(text: &str) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut m = 0usize;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let toks: Vec<&str> = raw.split_whitespace().collect();
        match toks.first() {
            None | Some(&"c") => continue,
            Some(&"p") => {
                if toks.len() != 4 || toks[1] != "tw" {
                    return Err(Error::Parse { line, msg: "expected `p tw <n> <m>`".into() });
                }
                n = Some(parse_usize(toks[2], line)?);
                m = parse_usize(toks[3], line)?;
            }
            Some(&"e") => {
                let n = n.ok_or(Error::Parse { line, msg: "e line before p line".into() })?;
                if toks.len() != 3 {
                    return Err(Error::Parse { line, msg: "expected `e <u> <v>`".into() });
                }
                let u = vertex_1based(toks[1], n, line)?;
                let v = vertex_1based(toks[2], n, line)?;
                edges.push(crate::graph::edge(u, v));
            }
            Some(other) => {
                return Err(Error::Parse { line, msg: format!("unknown line type {other:?}") });
            }
        }
    }
    let n = n.ok_or(Error::Parse { line: 0, msg: "missing `p tw` header".into() })?;
    if edges.len() != m {
        return Err(Error::Parse {
            line: 0,
            msg: format!("header promises {m} edges, found {}", edges.len()),
        });
    }
    Ok(Graph::new(n, edges))
}

pub fn write_gr(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "p tw {} {}", g.n(), g.m()).unwrap();
    for &(u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}

/// Parses the PACE `.td` format: `s td <#bags> <max-bag-size> <n>`, `b` bag
/// lines, then bag-tree edges.
pub fn parse_td(text: &str) -> Result<(TreeDecomposition, usize)> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut bags: Vec<Option<Vec<usize>>> = Vec::new();
    let mut tree_edges: Vec<(usize, usize)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let toks: Vec<&str> = raw.split_whitespace().collect();
        match toks.first() {
            None | Some(&"c") => continue,
            Some(&"s") => {
                if toks.len() != 5 || toks[1] != "td" {
                    return Err(Error::Parse {
                        line,
                        msg: "expected `s td <#bags> <max-bag-size> <n>`".into(),
                    });
                }
                let num_bags = parse_usize(toks[2], line)?;
                let max_size = parse_usize(toks[3], line)?;
                let n = parse_usize(toks[4], line)?;
                header = Some((num_bags, max_size, n));
                bags = vec![None; num_bags];
            }
            Some(&"b") => {
                let (num_bags, _, n) =
                    header.ok_or(Error::Parse { line, msg: "b line before s line".into() })?;
                if toks.len() < 2 {
                    return Err(Error::Parse { line, msg: "expected `b <id> <v..>`".into() });
                }
                let id = parse_usize(toks[1], line)?;
                if id == 0 || id > num_bags {
                    return Err(Error::Parse {
                        line,
                        msg: format!("bag id {id} out of range 1..={num_bags}"),
                    });
                }
                let mut content = Vec::new();
                for tok in &toks[2..] {
                    content.push(vertex_1based(tok, n, line)?);
                }
                content.sort_unstable();
                content.dedup();
                if bags[id - 1].replace(content).is_some() {
                    return Err(Error::Parse { line, msg: format!("duplicate bag {id}") });
                }
            }
            Some(_) => {
                let (num_bags, _, _) =
                    header.ok_or(Error::Parse { line, msg: "edge line before s line".into() })?;
                if toks.len() != 2 {
                    return Err(Error::Parse { line, msg: "expected `<i> <j>` tree edge".into() });
                }
                let i = parse_usize(toks[0], line)?;
                let j = parse_usize(toks[1], line)?;
                if i == 0 || i > num_bags || j == 0 || j > num_bags || i == j {
                    return Err(Error::Parse { line, msg: "tree edge out of range".into() });
                }
                tree_edges.push((i - 1, j - 1));
            }
        }
    }
    let (num_bags, max_size, n) =
        header.ok_or(Error::Parse { line: 0, msg: "missing `s td` header".into() })?;
    let bags: Vec<Vec<usize>> = bags
        .into_iter()
        .enumerate()
        .map(|(i, b)| b.ok_or(Error::Parse { line: 0, msg: format!("bag {} missing", i + 1) }))
        .collect::<Result<_>>()?;
    if let Some(bag) = bags.iter().find(|b| b.len() > max_size) {
        return Err(Error::Parse {
            line: 0,
            msg: format!("bag of size {} exceeds declared maximum {max_size}", bag.len()),
        });
    }
    let mut adj = vec![Vec::new(); num_bags];
    for (i, j) in tree_edges {
        adj[i].push(j);
        adj[j].push(i);
    }
    for a in &mut adj {
        a.sort_unstable();
        a.dedup();
    }
    Ok((TreeDecomposition { adj, bags }, n))
}

pub fn write_td(td: &TreeDecomposition, n: usize) -> String {
    let mut out = String::new();
    let max_size = td.bags.iter().map(|b| b.len()).max().unwrap_or(0);
    writeln!(out, "s td {} {} {}", td.num_nodes(), max_size, n).unwrap();
    for (i, bag) in td.bags.iter().enumerate() {
        write!(out, "b {}", i + 1).unwrap();
        for &v in bag {
            write!(out, " {}", v + 1).unwrap();
        }
        out.push('\n');
    }
    for (i, j) in td.tree_edges() {
        writeln!(out, "{} {}", i + 1, j + 1).unwrap();
    }
    out
}

/// Parses the `.sep` format: `s sep <order> <n>`, then `S`, `A`, `B` lines
/// carrying the separator and the two strict sides.
pub fn parse_sep(text: &str) -> Result<(Separation, usize)> {
    let mut header: Option<(usize, usize)> = None;
    let mut s_line: Option<Vec<usize>> = None;
    let mut a_line: Option<Vec<usize>> = None;
    let mut b_line: Option<Vec<usize>> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let toks: Vec<&str> = raw.split_whitespace().collect();
        let parse_side = |toks: &[&str], n: usize| -> Result<Vec<usize>> {
            toks.iter().map(|t| vertex_1based(t, n, line)).collect()
        };
        match toks.first() {
            None | Some(&"c") => continue,
            Some(&"s") => {
                if toks.len() != 4 || toks[1] != "sep" {
                    return Err(Error::Parse { line, msg: "expected `s sep <order> <n>`".into() });
                }
                header = Some((parse_usize(toks[2], line)?, parse_usize(toks[3], line)?));
            }
            Some(&"S") | Some(&"A") | Some(&"B") => {
                let (_, n) =
                    header.ok_or(Error::Parse { line, msg: "side line before s line".into() })?;
                let vs = parse_side(&toks[1..], n)?;
                let slot = match toks[0] {
                    "S" => &mut s_line,
                    "A" => &mut a_line,
                    _ => &mut b_line,
                };
                if slot.replace(vs).is_some() {
                    return Err(Error::Parse { line, msg: format!("duplicate {} line", toks[0]) });
                }
            }
            Some(other) => {
                return Err(Error::Parse { line, msg: format!("unknown line type {other:?}") });
            }
        }
    }
    let (order, n) = header.ok_or(Error::Parse { line: 0, msg: "missing `s sep` header".into() })?;
    let s = s_line.ok_or(Error::Parse { line: 0, msg: "missing S line".into() })?;
    let a = a_line.unwrap_or_default();
    let b = b_line.unwrap_or_default();
    if s.len() != order {
        return Err(Error::Parse {
            line: 0,
            msg: format!("separator has {} vertices, header says {order}", s.len()),
        });
    }
    let mut side_a = a;
    side_a.extend(s.iter().copied());
    let mut side_b = b;
    side_b.extend(s.iter().copied());
    Ok((Separation::new(side_a, side_b), n))
}

pub fn write_sep(sep: &Separation, n: usize) -> String {
    let mut out = String::new();
    let s = sep.separator();
    writeln!(out, "s sep {} {}", s.len(), n).unwrap();
    let emit = |out: &mut String, tag: &str, vs: &[usize]| {
        out.push_str(tag);
        for &v in vs {
            write!(out, " {}", v + 1).unwrap();
        }
        out.push('\n');
    };
    emit(&mut out, "S", &s);
    emit(&mut out, "A", &sep.strict_a());
    emit(&mut out, "B", &sep.strict_b());
    out
}

/// Debug export of G_C and G_S: vertex tags, lies-on pairs, auxiliary flags.
pub fn write_planarization_debug(p: &Planarization) -> String {
    let mut out = String::new();
    let d = &p.drawing;
    let orig = |e: usize| -> (usize, usize) {
        let (u, v) = d.edges()[e];
        (u + 1, v + 1)
    };
    writeln!(
        out,
        "pl gc {} {} {}",
        p.gc.num_vertices(),
        p.gc.num_edges(),
        p.gc_faces.num_faces()
    )
    .unwrap();
    for (id, kind) in p.gc.kind.iter().enumerate() {
        match kind {
            GcVertex::Outer(v) => writeln!(out, "n {} outer {}", id + 1, v + 1).unwrap(),
            GcVertex::Inner { edges, .. } => {
                let (a, b) = (orig(edges.0), orig(edges.1));
                writeln!(out, "n {} inner {} {} {} {}", id + 1, a.0, a.1, b.0, b.1).unwrap();
            }
        }
    }
    for (i, &(u, v)) in p.gc.edges.iter().enumerate() {
        let (a, b) = orig(p.gc.seg_lies_on[i]);
        writeln!(out, "g {} {} on {} {}", u + 1, v + 1, a, b).unwrap();
    }
    writeln!(
        out,
        "pl gs {} {} {}",
        p.gs.num_vertices(),
        p.gs.num_edges(),
        p.gs_faces.num_faces()
    )
    .unwrap();
    for id in 0..p.gs.num_vertices() {
        if id < p.gs.n_outer {
            writeln!(out, "n {} outer {}", id + 1, id + 1).unwrap();
        } else {
            let c = (id - p.gs.n_outer) / 2;
            let side = (id - p.gs.n_outer) % 2;
            let (e1, e2) = p.gs.lies_on[c];
            let (a, b) = (orig(e1), orig(e2));
            writeln!(
                out,
                "n {} half {} {} {} {} {} {}",
                id + 1,
                c + 1,
                side + 1,
                a.0,
                a.1,
                b.0,
                b.1
            )
            .unwrap();
        }
    }
    for (i, &(u, v)) in p.gs.edges.iter().enumerate() {
        match p.gs.seg_lies_on[i] {
            Some(e) => {
                let (a, b) = orig(e);
                writeln!(out, "g {} {} on {} {}", u + 1, v + 1, a, b).unwrap();
            }
            None => writeln!(out, "g {} {} aux", u + 1, v + 1).unwrap(),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn cvx_round_trip_with_order() {
        let d = ConvexDrawing::with_order(4, vec![(0, 2), (1, 3)], vec![2, 0, 3, 1]).unwrap();
        let text = write_cvx(&d);
        let back = parse_cvx(&text).unwrap();
        assert_eq!(back.edges(), d.edges());
        assert_eq!(back.order(), d.order());
    }

    #[test]
    fn cvx_rejects_multi_edges() {
        let text = "p cvx 3 2\ne 1 2\ne 2 1\n";
        assert!(matches!(parse_cvx(text), Err(Error::Parse { .. })));
    }

    #[test]
    fn cvx_rejects_self_loop_with_line_number() {
        let text = "p cvx 3 1\ne 2 2\n";
        match parse_cvx(text) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn gr_round_trip() {
        let g = Graph::new(5, vec![(0, 1), (2, 4), (1, 3)]);
        assert_eq!(parse_gr(&write_gr(&g)).unwrap(), g);
    }

    #[test]
    fn td_round_trip() {
        let td = TreeDecomposition {
            adj: vec![vec![1], vec![0, 2], vec![1]],
            bags: vec![vec![0, 1], vec![1, 2], vec![2, 3]],
        };
        let text = write_td(&td, 4);
        let (back, n) = parse_td(&text).unwrap();
        assert_eq!(n, 4);
        assert_eq!(back.bags, td.bags);
        assert_eq!(back.tree_edges(), td.tree_edges());
    }

    #[test]
    fn sep_round_trip() {
        let sep = Separation::new(vec![0, 1, 2], vec![2, 3, 4]);
        let text = write_sep(&sep, 5);
        let (back, n) = parse_sep(&text).unwrap();
        assert_eq!(n, 5);
        assert_eq!(back, sep);
    }

    #[test]
    fn malformed_files_error_with_line() {
        match parse_gr("p tw 3 1\ne 1 9\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    proptest! {
        #[test]
        fn cvx_round_trip_random(n in 3usize..9, seed in 0u64..50) {
            let d = crate::families::random_outer_min_k_planar(n, 2, seed);
            let text = write_cvx(&d);
            let back = parse_cvx(&text).unwrap();
            prop_assert_eq!(back.edges(), d.edges());
            prop_assert_eq!(back.order(), d.order());
        }
    }
}
