use std::fs;
use std::path::Path;

use serde_json::{json, Value};
use sha2::{Digest, Sha256};
use toricrep::coxeter::{
    coefficient_orbits, f_vector_by_parabolic_indices, h_vector_by_parabolic_indices,
    lambda_matrix, weyl_vertex_action, BuildOptions, CoxeterComplex,
};
use toricrep::group::{check_equivariance, euler_characteristic, toric_homology, RealToricSpace};
use toricrep::nestohedra::top_homology_check;
use toricrep::tableaux::{
    alternating_permutation_counts, decompose_type_a, decompose_type_b, Decomposition,
};
use toricrep::{
    reduced_betti, BettiTable, Gf2Matrix, Gf2Vector, RootSystem, SimplicialComplex, VertexGroup,
};

use crate::cache::ComplexCache;
use crate::error::{CliError, CliResult};
use crate::output::{Check, Outcome, Table};

pub struct Context {
    pub cache: ComplexCache,
    pub options: BuildOptions,
}

impl Context {
    pub fn coxeter(&self, rs: &RootSystem) -> CliResult<CoxeterComplex> {
        Ok(self.cache.get_or_build(rs, self.options)?)
    }

    /// The toric variety of `rs` with its Weyl group action.
    pub fn weyl_space(
        &self,
        rs: &RootSystem,
    ) -> CliResult<(CoxeterComplex, RealToricSpace, VertexGroup)> {
        let cx = self.coxeter(rs)?;
        let g = weyl_vertex_action(&cx)?;
        let x = RealToricSpace::new(cx.complex.clone(), lambda_matrix(&cx))?;
        Ok((cx, x, g))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Family {
    A,
    B,
}

fn alternating(values: &[i128]) -> i128 {
    values
        .iter()
        .enumerate()
        .map(|(i, &x)| if i % 2 == 0 { x } else { -x })
        .sum()
}

fn betti_rows(b: &BettiTable) -> Table {
    let mut t = Table::new(&["degree", "betti"]);
    for (d, v) in b.iter() {
        t.push(vec![d.to_string(), v.to_string()]);
    }
    t
}

fn euler_check(b: &BettiTable, chi: i128) -> Check {
    Check::with_detail(
        "euler_identity",
        b.euler_characteristic() == chi,
        format!("χ = {chi}"),
    )
}

pub fn betti(ctx: &Context, rs: &RootSystem) -> CliResult<Outcome> {
    let (cx, x, g) = ctx.weyl_space(rs)?;
    let b = toric_homology(&x, Some(&g))?;
    let chi = euler_characteristic(&x);
    let checks = vec![
        euler_check(&b, chi),
        Check::new(
            "h_vector_matches_parabolic",
            cx.complex.h_vector() == h_vector_by_parabolic_indices(rs),
        ),
    ];
    Ok(Outcome {
        input: json!({ "root_system": rs.to_string() }),
        result: json!({
            "root_system": rs.to_string(),
            "betti": b.values,
            "vertices": cx.complex.n_vertices(),
            "facets": cx.complex.facets().len(),
        }),
        checks,
        table: betti_rows(&b),
    })
}

pub fn hvector(rs: &RootSystem) -> CliResult<Outcome> {
    let h = h_vector_by_parabolic_indices(rs);
    let f = f_vector_by_parabolic_indices(rs);
    let palindromic = h.iter().eq(h.iter().rev());
    let total: i128 = h.iter().sum();
    let checks = vec![
        Check::new("palindromic", palindromic),
        Check::with_detail(
            "sum_is_group_order",
            total == rs.weyl_order() as i128,
            format!("|W| = {}", rs.weyl_order()),
        ),
    ];
    let mut table = Table::new(&["i", "h_i", "f_(i-1)"]);
    for (i, v) in h.iter().enumerate() {
        table.push(vec![i.to_string(), v.to_string(), f.counts[i].to_string()]);
    }
    Ok(Outcome {
        input: json!({ "root_system": rs.to_string() }),
        result: json!({ "root_system": rs.to_string(), "h_vector": h, "f_vector": f.counts }),
        checks,
        table,
    })
}

pub fn euler(rs: &RootSystem) -> CliResult<Outcome> {
    let h = h_vector_by_parabolic_indices(rs);
    let f = f_vector_by_parabolic_indices(rs);
    let chi = alternating(&h);
    let n = rs.rank() as u32;
    let cells: i128 = f
        .counts
        .iter()
        .enumerate()
        .map(|(i, &c)| (if i % 2 == 0 { 1 } else { -1 }) * c as i128 * (1i128 << (n - i as u32)))
        .sum();
    let mut table = Table::new(&["root_system", "euler_characteristic"]);
    table.push(vec![rs.to_string(), chi.to_string()]);
    Ok(Outcome {
        input: json!({ "root_system": rs.to_string() }),
        result: json!({ "root_system": rs.to_string(), "euler_characteristic": chi }),
        checks: vec![Check::new("cell_count_identity", cells == chi)],
        table,
    })
}

/// Per-orbit data: size, 1-indexed rows of a representative and, when
/// requested, reduced Betti numbers of its full subcomplex.
pub struct OrbitRow {
    pub size: usize,
    pub rows: Vec<usize>,
    pub reduced_betti: Option<BettiTable>,
}

pub fn orbit_rows(
    ctx: &Context,
    rs: &RootSystem,
    with_betti: bool,
) -> CliResult<(Vec<OrbitRow>, Vec<Check>)> {
    let orbits = coefficient_orbits(rs)?;
    let mut rows: Vec<OrbitRow> = orbits
        .iter()
        .map(|o| OrbitRow {
            size: o.size,
            rows: o.representative_rows.iter().map(|r| r + 1).collect(),
            reduced_betti: None,
        })
        .collect();
    let total: usize = rows.iter().map(|o| o.size).sum();
    let mut checks = vec![Check::new("sizes_sum", total + 1 == 1 << rs.rank())];
    if with_betti {
        let (cx, x, g) = ctx.weyl_space(rs)?;
        let mut summed = vec![0u64; cx.complex.dim() as usize + 2];
        summed[0] = 1;
        for (row, o) in rows.iter_mut().zip(&orbits) {
            let mut s = Gf2Vector::zeros(cx.complex.n_vertices());
            for &r in &o.representative_rows {
                s.xor_assign(x.lambda().row(r));
            }
            let b = reduced_betti(&x.complex().full_subcomplex_on(&s).complex);
            for (d, v) in b.iter() {
                summed[(d + 1) as usize] += v * o.size as u64;
            }
            row.reduced_betti = Some(b);
        }
        let direct = toric_homology(&x, Some(&g))?;
        checks.push(Check::new(
            "orbit_sum_matches_homology",
            summed == direct.values,
        ));
    }
    Ok((rows, checks))
}

pub fn orbits(ctx: &Context, rs: &RootSystem, with_betti: bool) -> CliResult<Outcome> {
    let (rows, checks) = orbit_rows(ctx, rs, with_betti)?;
    let mut table = Table::new(if with_betti {
        &["size", "rows", "reduced_betti"]
    } else {
        &["size", "rows"]
    });
    let mut entries = Vec::new();
    for o in &rows {
        let rows_text = o
            .rows
            .iter()
            .map(usize::to_string)
            .collect::<Vec<_>>()
            .join(" ");
        let mut cells = vec![o.size.to_string(), rows_text];
        let mut entry = json!({ "size": o.size, "rows": o.rows });
        if let Some(b) = &o.reduced_betti {
            let nonzero: Vec<String> = b
                .iter()
                .filter(|&(_, v)| v != 0)
                .map(|(d, v)| format!("β̃{d}={v}"))
                .collect();
            cells.push(nonzero.join(" "));
            entry["reduced_betti"] = json!(b);
        }
        table.push(cells);
        entries.push(entry);
    }
    Ok(Outcome {
        input: json!({ "root_system": rs.to_string(), "betti": with_betti }),
        result: json!({ "root_system": rs.to_string(), "orbits": entries, "nonzero_total": (1usize << rs.rank()) - 1 }),
        checks,
        table,
    })
}

fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

fn decomposition_outcome<L: serde::Serialize + std::fmt::Display>(
    input: Value,
    d: &Decomposition<L>,
    mut checks: Vec<Check>,
) -> Outcome {
    let recomputed: u128 = d
        .terms
        .iter()
        .map(|t| t.multiplicity as u128 * t.dimension)
        .sum();
    checks.insert(
        0,
        Check::new("dimension_sum", recomputed == d.total_dimension),
    );
    let mut table = Table::new(&["label", "multiplicity", "dimension"]);
    let terms: Vec<Value> = d
        .terms
        .iter()
        .map(|t| {
            table.push(vec![t.label.to_string(), t.multiplicity.to_string(), t.dimension.to_string()]);
            json!({ "label": t.label, "label_text": t.label.to_string(), "multiplicity": t.multiplicity, "dimension": t.dimension })
        })
        .collect();
    Outcome {
        result: json!({ "terms": terms, "total_dimension": d.total_dimension, "text": d.to_string() }),
        input,
        checks,
        table,
    }
}

pub fn decompose(family: Family, n: u32, degree: u32) -> CliResult<Outcome> {
    let input = json!({ "family": format!("{family:?}"), "n": n, "degree": degree });
    match family {
        Family::A => {
            let d = decompose_type_a(n, degree).map_err(CliError::usage)?;
            let alt = alternating_permutation_counts(2 * degree as usize)[2 * degree as usize];
            let closed = binomial(n as u64 + 1, 2 * degree as u64) * alt;
            let check = Check::with_detail(
                "alternating_count",
                closed == d.total_dimension,
                format!("C(n+1, 2r)·A_2r = {closed}"),
            );
            Ok(decomposition_outcome(input, &d, vec![check]))
        }
        Family::B => {
            if n == 0 {
                return Err(CliError::Usage("n must be positive".into()));
            }
            let d = decompose_type_b(n, degree).map_err(CliError::usage)?;
            Ok(decomposition_outcome(input, &d, Vec::new()))
        }
    }
}

pub fn nestohedron(n: usize, k: usize) -> CliResult<Outcome> {
    if n.is_multiple_of(2) || k == 0 || k > n {
        return Err(CliError::Usage(format!(
            "need odd n and 1 <= k <= n, got n = {n}, k = {k}"
        )));
    }
    let report = top_homology_check(n, k)?;
    let checks = vec![
        Check::new("vanishing_above_top", report.vanishing_above),
        Check::with_detail(
            "top_matches_skew_hook",
            report.top_dimension as u128 == report.expected_top_dimension,
            format!("skew hook dimension {}", report.expected_top_dimension),
        ),
    ];
    Ok(Outcome {
        input: json!({ "n": n, "k": k }),
        result: json!({
            "betti": report.betti.values,
            "top_degree": report.top_degree,
            "top_dimension": report.top_dimension,
            "expected_top_dimension": report.expected_top_dimension,
            "descent_set": report.descent_set,
        }),
        table: betti_rows(&report.betti),
        checks,
    })
}

fn read_input(path: &Path) -> CliResult<(String, String)> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    let digest = hex::encode(Sha256::digest(text.as_bytes()));
    Ok((text, digest))
}

pub fn custom(complex: &Path, lambda: &Path, group: Option<&Path>) -> CliResult<Outcome> {
    let (complex_text, complex_hash) = read_input(complex)?;
    let k: SimplicialComplex = serde_json::from_str(&complex_text)
        .map_err(|e| CliError::Usage(format!("{}: {e}", complex.display())))?;
    let (lambda_text, lambda_hash) = read_input(lambda)?;
    let m = Gf2Matrix::parse(&lambda_text)
        .map_err(|e| CliError::Usage(format!("{}: {e}", lambda.display())))?;
    let x = RealToricSpace::new(k, m).map_err(CliError::usage)?;
    let mut input = json!({
        "complex": { "path": complex.display().to_string(), "sha256": complex_hash },
        "lambda": { "path": lambda.display().to_string(), "sha256": lambda_hash },
    });
    let g = match group {
        Some(path) => {
            let (text, hash) = read_input(path)?;
            let g: VertexGroup = serde_json::from_str(&text)
                .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
            let eq = check_equivariance(&g, &x).map_err(CliError::usage)?;
            if let Some(i) = eq.violating_generator {
                return Err(CliError::Usage(format!(
                    "generator {i} does not preserve the row space of the characteristic matrix"
                )));
            }
            input["group"] = json!({ "path": path.display().to_string(), "sha256": hash });
            Some(g)
        }
        None => None,
    };
    let b = toric_homology(&x, g.as_ref())?;
    Ok(Outcome {
        input,
        result: json!({
            "betti": b.values,
            "vertices": x.complex().n_vertices(),
            "facets": x.complex().facets().len(),
            "rows": x.lambda().n_rows(),
        }),
        checks: vec![euler_check(&b, euler_characteristic(&x))],
        table: betti_rows(&b),
    })
}
