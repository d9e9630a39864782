use std::fmt::Write as _;

use chromatic_core::chromatic::{
    broken_circuit_free_forests, chromatic_brute, chromatic_classical, chromatic_scheme,
    chromatic_whitney, deletion_contraction, forest_level_counts, scheme_forest_sets,
};
use chromatic_core::polymer::{activity, activity_table, activity_via_scheme, chromatic_via_polymer, xi};
use chromatic_core::potts::{
    check_mayer_identity, partition_function, zero_temperature_antiferromagnetic,
    InverseTemperature, PottsParameters,
};
use chromatic_core::schemes::{check_penrose_identity, validate_scheme, WeightAssignment};
use chromatic_core::{EdgeSet, Error, IntPolynomial, SchemeKind, SchemeMap, VertexSet};
use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::{Context, Failure, Method, Output};

type Outcome = Result<String, Failure>;

fn render(v: &Value) -> String {
    format!("{}\n", serde_json::to_string_pretty(v).expect("json values serialize"))
}

fn coefficient_list(p: &IntPolynomial) -> String {
    let cs: Vec<String> = if p.is_zero() {
        vec!["0".into()]
    } else {
        p.coefficients().iter().map(|c| c.to_string()).collect()
    };
    format!("[{}]", cs.join(", "))
}

fn vertex_labels(ctx: &Context, vs: VertexSet) -> Vec<String> {
    vs.iter().map(|v| ctx.graph.labels[v].clone()).collect()
}

fn edge_labels(ctx: &Context, es: EdgeSet) -> Vec<String> {
    es.iter()
        .map(|id| {
            let e = ctx.graph.graph.edge(id);
            format!("{}-{}", ctx.graph.labels[e.u], ctx.graph.labels[e.v])
        })
        .collect()
}

fn schemes_by_name(names: &[String]) -> Result<Vec<SchemeMap>, Failure> {
    names.iter().map(|n| SchemeMap::by_name(n.trim()).map_err(Failure::from)).collect()
}

fn polynomial_by(ctx: &Context, method: Method, scheme: Option<&str>) -> Result<IntPolynomial, Error> {
    let (g, l) = (&ctx.graph.graph, &ctx.limits);
    match method {
        Method::Classical => chromatic_classical(g, l),
        Method::Whitney => chromatic_whitney(g, l),
        Method::Scheme => chromatic_scheme(g, &SchemeMap::by_name(scheme.unwrap_or("minimal-tree"))?, l),
        Method::Polymer => chromatic_via_polymer(g, l),
        Method::DeletionContraction => deletion_contraction(g, l),
        Method::Brute => chromatic_brute(g, l),
    }
}

pub fn compute(ctx: &Context, method: Method, scheme: Option<&str>) -> Outcome {
    let p = polynomial_by(ctx, method, scheme)?;
    let name = match method {
        Method::Scheme => format!("scheme:{}", scheme.unwrap_or("minimal-tree")),
        m => format!("{m:?}").to_lowercase(),
    };
    Ok(match ctx.out {
        Output::Json => {
            let mut v = p.to_json();
            v["method"] = json!(name);
            render(&v)
        }
        Output::Text => format!("P(q) = {p}\ncoefficients: {}\n", coefficient_list(&p)),
    })
}

struct Check {
    name: String,
    passed: bool,
    detail: String,
}

impl Check {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check { name: name.into(), passed, detail: detail.into() }
    }
}

/// `Ok(None)` when the method is skipped for exceeding the coloring budget.
fn optional_brute(ctx: &Context) -> Result<Option<IntPolynomial>, Error> {
    match chromatic_brute(&ctx.graph.graph, &ctx.limits) {
        Ok(p) => Ok(Some(p)),
        Err(Error::BudgetExceeded { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

pub fn verify(ctx: &Context, scheme_names: &[String]) -> Outcome {
    let (g, l) = (&ctx.graph.graph, &ctx.limits);
    let schemes = schemes_by_name(scheme_names)?;
    for m in &schemes {
        m.ensure_valid_for(g, l)?;
    }

    let mut methods: Vec<(String, IntPolynomial)> = vec![
        ("classical".into(), chromatic_classical(g, l)?),
        ("whitney".into(), chromatic_whitney(g, l)?),
    ];
    for m in &schemes {
        methods.push((format!("scheme:{}", m.name()), chromatic_scheme(g, m, l)?));
    }
    methods.push(("polymer".into(), chromatic_via_polymer(g, l)?));
    methods.push(("deletion-contraction".into(), deletion_contraction(g, l)?));
    let brute = optional_brute(ctx)?;
    if let Some(p) = &brute {
        methods.push(("brute".into(), p.clone()));
    }
    let reference = methods[0].1.clone();
    let agree = methods.iter().all(|(_, p)| *p == reference);

    let mut checks = Vec::new();
    if brute.is_none() {
        checks.push(Check::new("brute", true, "skipped: q^n exceeds the coloring budget"));
    }

    if let Some(m) = schemes.iter().find(|m| m.kind() == SchemeKind::MinimalTree) {
        let same = scheme_forest_sets(g, m, l)? == broken_circuit_free_forests(g, l)?;
        checks.push(Check::new("forests:minimal-tree=whitney", same, "exact set equality"));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for comp in g.components().into_iter().filter(|c| c.len() >= 2) {
        let (sub, _) = g.restrict(comp);
        let where_ = format!("component {{{}}}", vertex_labels(ctx, comp).join(","));
        for m in &schemes {
            let report = validate_scheme(&sub, m.as_map(), l)?;
            let detail = match &report.violation {
                None => format!("{where_}: {} subgraphs, {} trees", report.subgraphs, report.trees),
                Some(v) => format!("{where_}: {v}"),
            };
            checks.push(Check::new(format!("partition:{}", m.name()), report.is_valid(), detail));

            let mut weights = vec![WeightAssignment::constant(&sub, BigInt::from(-1).into())];
            weights.extend((0..3).map(|_| WeightAssignment::random_rational(&sub, &mut rng)));
            for (i, w) in weights.iter().enumerate() {
                let c = check_penrose_identity(&sub, w, m, l)?;
                checks.push(Check::new(
                    format!("penrose-identity:{}", m.name()),
                    c.equal,
                    format!("{where_}, weights #{i}: {} vs {}", c.lhs, c.rhs),
                ));
            }
        }
    }

    let table = activity_table(g, l)?;
    for m in &schemes {
        let mut bad = None;
        for (r, a) in &table {
            if activity_via_scheme(g, *r, m, l)? != *a {
                bad = Some(*r);
                break;
            }
        }
        let detail = match bad {
            None => format!("{} polymers", table.len()),
            Some(r) => format!("mismatch on {{{}}}", vertex_labels(ctx, r.vertices()).join(",")),
        };
        checks.push(Check::new(format!("activities:{}", m.name()), bad.is_none(), detail));
    }

    let n = g.vertex_count();
    let mut mayer = (0, 0, None);
    for r in g.vertices().subsets().filter(|r| (2..=5).contains(&r.len())) {
        for q in [2, 3] {
            match check_mayer_identity(g, r, q, l) {
                Ok(c) => {
                    mayer.0 += 1;
                    if c.equal {
                        mayer.1 += 1;
                    } else if mayer.2.is_none() {
                        mayer.2 = Some(format!("R = {:?}, q = {q}: {} vs {}", vertex_labels(ctx, r), c.lhs, c.rhs));
                    }
                }
                Err(Error::BudgetExceeded { .. }) => {}
                Err(e) => return Err(e.into()),
            }
        }
    }
    let detail = mayer.2.clone().unwrap_or_else(|| format!("{}/{} subsets and q", mayer.1, mayer.0));
    checks.push(Check::new("mayer", mayer.0 == mayer.1, detail));

    let mut zero_t = Vec::new();
    for q in 0..=(n as u32 + 1) {
        match zero_temperature_antiferromagnetic(g, q, l) {
            Ok(z) => zero_t.push((q, BigInt::from(z) == reference.eval(&BigInt::from(q)))),
            Err(Error::BudgetExceeded { .. }) => break,
            Err(e) => return Err(e.into()),
        }
    }
    let passed = zero_t.iter().all(|x| x.1);
    let detail = match zero_t.last() {
        Some((q, _)) => format!("q = 0..{q}"),
        None => "skipped: q^n exceeds the coloring budget".into(),
    };
    checks.push(Check::new("zero-temperature-potts", passed, detail));

    let ok = agree && checks.iter().all(|c| c.passed);
    let report = match ctx.out {
        Output::Json => render(&json!({
            "methods": methods
                .iter()
                .map(|(name, p)| json!({ "method": name, "polynomial": p.to_json() }))
                .collect::<Vec<_>>(),
            "agree": agree,
            "checks": checks
                .iter()
                .map(|c| json!({ "name": c.name, "passed": c.passed, "detail": c.detail }))
                .collect::<Vec<_>>(),
            "ok": ok,
        })),
        Output::Text => {
            let mut s = String::from("methods\n");
            for (name, p) in &methods {
                let mark = if *p == reference { "=" } else { "!" };
                let _ = writeln!(s, "  {mark} {name:<24} {}", coefficient_list(p));
            }
            let _ = writeln!(s, "checks");
            for c in &checks {
                let mark = if c.passed { "PASS" } else { "FAIL" };
                let _ = writeln!(s, "  {mark} {:<32} {}", c.name, c.detail);
            }
            let _ = writeln!(s, "result: {}", if ok { "all agree" } else { "DISAGREEMENT" });
            s
        }
    };
    if ok {
        return Ok(report);
    }
    let mut witness = String::from("verification failed");
    for (name, p) in methods.iter().filter(|(_, p)| *p != reference) {
        let _ = write!(
            witness,
            "\n  {name} gives {} but classical gives {}",
            coefficient_list(p),
            coefficient_list(&reference)
        );
    }
    for c in checks.iter().filter(|c| !c.passed) {
        let _ = write!(witness, "\n  {}: {}", c.name, c.detail);
    }
    Err(Failure { code: 1, message: witness, report })
}

pub fn forests(ctx: &Context, scheme_names: &[String], list: bool) -> Outcome {
    let (g, l) = (&ctx.graph.graph, &ctx.limits);
    let schemes = schemes_by_name(scheme_names)?;
    let mut rows = Vec::new();
    for m in &schemes {
        let counts = forest_level_counts(g, m, l)?.counts;
        let sets = scheme_forest_sets(g, m, l)?;
        rows.push((m.name().to_string(), counts, sets));
    }
    let counts_agree = rows.windows(2).all(|w| w[0].1 == w[1].1);
    let sets_differ = rows.windows(2).any(|w| w[0].2 != w[1].2);
    let out = match ctx.out {
        Output::Json => render(&json!({
            "schemes": rows
                .iter()
                .map(|(name, counts, sets)| {
                    let mut v = json!({ "scheme": name, "counts": counts });
                    if list {
                        v["forests"] = sets.iter().map(|f| json!(edge_labels(ctx, *f))).collect();
                    }
                    v
                })
                .collect::<Vec<_>>(),
            "counts_agree": counts_agree,
            "sets_differ": sets_differ,
        })),
        Output::Text => {
            let mut s = String::new();
            for (name, counts, sets) in &rows {
                let cs: Vec<String> = counts.iter().map(|c| c.to_string()).collect();
                let _ = writeln!(s, "{name}: N = ({})", cs.join(", "));
                if list {
                    for f in sets {
                        let _ = writeln!(s, "  {{{}}}", edge_labels(ctx, *f).join(", "));
                    }
                }
            }
            let yes_no = |b: bool| if b { "yes" } else { "no" };
            let _ = writeln!(s, "counts agree: {}", yes_no(counts_agree));
            let _ = writeln!(s, "forest sets differ: {}", yes_no(sets_differ));
            s
        }
    };
    if counts_agree {
        Ok(out)
    } else {
        Err(Failure { code: 1, message: "forest level counts differ between schemes".into(), report: out })
    }
}

pub fn activities(ctx: &Context) -> Outcome {
    let (g, l) = (&ctx.graph.graph, &ctx.limits);
    let table = activity_table(g, l)?;
    let x = xi(g, l)?;
    Ok(match ctx.out {
        Output::Json => {
            let rows: Vec<Value> = table
                .iter()
                .map(|(r, a)| {
                    let mut v = a.to_json();
                    v["vertices"] = json!(vertex_labels(ctx, r.vertices()));
                    v
                })
                .collect();
            render(&json!({ "activities": rows, "xi": x.to_json() }))
        }
        Output::Text => {
            let mut s = String::new();
            for (r, a) in &table {
                debug_assert_eq!(activity(g, *r, l).as_ref(), Ok(a));
                let _ = writeln!(s, "{{{}}}\t{a}", vertex_labels(ctx, r.vertices()).join(","));
            }
            let _ = writeln!(s, "Xi = {x}");
            s
        }
    })
}

pub fn potts(ctx: &Context, q: u32, betas: &[String], coupling: f64) -> Outcome {
    let (g, l) = (&ctx.graph.graph, &ctx.limits);
    if q == 0 {
        return Err(Failure::usage("q must be at least 1"));
    }
    let mut rows = Vec::new();
    for b in betas {
        let b = b.trim();
        let (beta, z) = if b == "inf" {
            let z = if coupling < 0.0 {
                zero_temperature_antiferromagnetic(g, q, l)? as f64
            } else if coupling == 0.0 {
                partition_function(g, &PottsParameters { q, beta: InverseTemperature::Finite(0.0), coupling }, l)?
            } else {
                return Err(Failure::usage("Z diverges at beta = inf for a ferromagnetic coupling"));
            };
            (json!("inf"), z)
        } else {
            let beta: f64 = b.parse().map_err(|_| Failure::usage(format!("bad beta `{b}`")))?;
            if beta.is_nan() || beta < 0.0 {
                return Err(Failure::usage(format!("beta must be nonnegative, got {b}")));
            }
            let params = PottsParameters { q, beta: InverseTemperature::Finite(beta), coupling };
            (json!(beta), partition_function(g, &params, l)?)
        };
        rows.push(json!({ "q": q, "beta": beta, "J": coupling, "Z": z }));
    }
    Ok(match ctx.out {
        Output::Json => render(&Value::Array(rows)),
        Output::Text => {
            let mut s = String::from("beta\tZ\n");
            for r in &rows {
                let beta = match &r["beta"] {
                    Value::String(t) => t.clone(),
                    v => v.to_string(),
                };
                let _ = writeln!(s, "{beta}\t{}", r["Z"]);
            }
            s
        }
    })
}
