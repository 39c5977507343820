//! Scaling runs over generated families.

use std::time::Instant;

use flowtype::generators::{self, is_cubic};
use flowtype::{layered_reassembling, run_reassembling, sweep_reassembling, Error, PlaneGraph, ReassemblingTree};

#[derive(Debug, Clone, PartialEq)]
pub struct Row {
    /// Vertices of the generated instance.
    pub n: usize,
    pub k: usize,
    pub delta: usize,
    pub alpha: usize,
    pub ops: u64,
    pub millis: f64,
}

pub fn generate(family: &str, k: usize, n: usize, seed: u64) -> Result<PlaneGraph, Error> {
    match family {
        "nested-cycles" => generators::nested_cycles(k, n, seed),
        "path-of-rings" => generators::path_of_rings(k, n, seed),
        "random-planar" => generators::random_planar(n, seed),
        other => Err(Error::UnknownFamily(other.to_string())),
    }
}

/// Tree used for an instance: layered for cubic graphs, sweep otherwise.
pub fn tree_for(pg: &PlaneGraph) -> Result<(ReassemblingTree, usize), Error> {
    let k = pg.peel_edge_layers()?.k;
    if is_cubic(&pg.net) {
        Ok((layered_reassembling(pg)?.tree, k))
    } else {
        Ok((sweep_reassembling(&pg.net)?.0, k))
    }
}

pub fn run(family: &str, k: usize, sizes: &[usize], seed: u64) -> Result<Vec<Row>, Error> {
    // Validate the family even when every size is skipped.
    generate(family, k, 8, seed)?;
    let mut rows = Vec::new();
    for &n in sizes.iter().filter(|&&n| n > 0) {
        let pg = generate(family, k, n, seed)?;
        let (tree, k) = tree_for(&pg)?;
        let start = Instant::now();
        let (_, stats) = run_reassembling(&pg.net, &tree)?;
        let millis = start.elapsed().as_secs_f64() * 1e3;
        rows.push(Row {
            n: pg.net.vertex_count(),
            k,
            delta: stats.delta,
            alpha: stats.alpha,
            ops: stats.ops.total() + stats.basis_ops.total(),
            millis,
        });
    }
    Ok(rows)
}

pub fn csv(rows: &[Row]) -> String {
    let mut s = String::from("n,k,delta,alpha,ops,time_ms\n");
    for r in rows {
        s.push_str(&format!("{},{},{},{},{},{:.3}\n", r.n, r.k, r.delta, r.alpha, r.ops, r.millis));
    }
    s
}

/// Growth ratios between consecutive rows and a least-squares line through
/// (n, ops) with its largest relative residual.
pub fn scaling_report(rows: &[Row]) -> Vec<String> {
    let mut out = Vec::new();
    for w in rows.windows(2) {
        out.push(format!(
            "n {} -> {}: ops x{:.3}, time x{:.3}",
            w[0].n,
            w[1].n,
            w[1].ops as f64 / w[0].ops as f64,
            w[1].millis / w[0].millis.max(1e-9)
        ));
    }
    if rows.len() >= 2 {
        let m = rows.len() as f64;
        let (sx, sy) = rows.iter().fold((0.0, 0.0), |(a, b), r| (a + r.n as f64, b + r.ops as f64));
        let (mx, my) = (sx / m, sy / m);
        let sxx: f64 = rows.iter().map(|r| (r.n as f64 - mx).powi(2)).sum();
        let sxy: f64 = rows.iter().map(|r| (r.n as f64 - mx) * (r.ops as f64 - my)).sum();
        let slope = if sxx > 0.0 { sxy / sxx } else { 0.0 };
        let icept = my - slope * mx;
        let worst = rows
            .iter()
            .map(|r| ((r.ops as f64 - (slope * r.n as f64 + icept)) / r.ops as f64).abs())
            .fold(0.0, f64::max);
        out.push(format!("linear fit: ops = {slope:.2} n + {icept:.1}, max relative residual {:.2}%", worst * 100.0));
    }
    out
}
