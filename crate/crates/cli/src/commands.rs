use std::fmt::Write;
use std::path::Path;

use serde_json::{json, Value};

use g2star_core::atlas::{epsilon_invariant_with, g_eps, run_all_suites, SignConvention};
use g2star_core::g2core::{family, standard_gram, FamilyName};
use g2star_core::geometry::{
    check_deformation_parallel, curvature as curvature_of, holonomy as holonomy_of, levi_civita,
    second_bianchi,
};
use g2star_core::linalg::{gram_signature, Matrix, Subspace};
use g2star_core::repanalysis::{
    berger_test as berger_of, classify_type, curvature_space, Indecomposability, Representation,
};
use g2star_core::scalars::QSqrt2;
use g2star_core::{Error, Result};

use crate::input;

pub struct Report {
    pub text: String,
    pub json: Value,
    pub ok: bool,
}

pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse { .. }
        | Error::UnboundVariable(_)
        | Error::DimensionMismatch { .. }
        | Error::DegenerateMetric
        | Error::JacobiViolation { .. }
        | Error::Input(_) => 2,
        _ => 1,
    }
}

fn matrix_json<T: g2star_core::Ring>(m: &Matrix<T>) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|r| {
                Value::Array(
                    (0..m.cols())
                        .map(|c| Value::String(m[(r, c)].to_string()))
                        .collect(),
                )
            })
            .collect(),
    )
}

fn vector_json(v: &[QSqrt2]) -> Value {
    Value::Array(v.iter().map(|x| Value::String(x.to_string())).collect())
}

fn indent(m: &impl ToString) -> String {
    m.to_string().lines().map(|l| format!("  {l}\n")).collect()
}

fn matching_families(s: &Subspace) -> Vec<FamilyName> {
    if s.ambient() != 49 {
        return vec![];
    }
    FamilyName::all()
        .into_iter()
        .filter(|&n| family(n) == s)
        .collect()
}

pub fn validate(path: Option<&Path>) -> Result<Report> {
    let g = input::lie_algebra(path)?;
    let report = g.jacobi_check();
    let mut text = String::new();
    let violations: Vec<Value> = report
        .violations
        .iter()
        .map(|v| json!({"i": v.i + 1, "j": v.j + 1, "k": v.k + 1, "l": v.l + 1, "residual": v.residual.to_string()}))
        .collect();
    match report.first() {
        None => writeln!(text, "Jacobi identity holds (dimension {})", g.dim()).unwrap(),
        Some(v) => writeln!(
            text,
            "Jacobi identity fails at (i,j,k,l) = ({},{},{},{}): component {} of J(e{},e{},e{}) is {}",
            v.i + 1,
            v.j + 1,
            v.k + 1,
            v.l + 1,
            v.l + 1,
            v.i + 1,
            v.j + 1,
            v.k + 1,
            v.residual
        )
        .unwrap(),
    }
    Ok(Report {
        text,
        json: json!({"dim": g.dim(), "jacobi": report.holds(), "violations": violations}),
        ok: report.holds(),
    })
}

pub fn metric(gram: Option<&Path>) -> Result<Report> {
    let g = match gram {
        Some(p) => input::gram_file(p)?,
        None => standard_gram(),
    };
    if g != g.transpose() {
        return Err(Error::Input("gram matrix is not symmetric".into()));
    }
    let s = gram_signature(&g);
    let nondegenerate = s.zero == 0;
    let text = format!(
        "signature (positive, negative, zero) = ({}, {}, {})\nsignature (negative, positive) = ({}, {})\nnondegenerate: {}\n",
        s.positive, s.negative, s.zero, s.negative, s.positive, nondegenerate
    );
    Ok(Report {
        text,
        json: json!({"positive": s.positive, "negative": s.negative, "zero": s.zero, "nondegenerate": nondegenerate}),
        ok: nondegenerate,
    })
}

pub fn connection(path: Option<&Path>, gram: Option<&Path>) -> Result<Report> {
    let m = input::metric_algebra(path, gram)?;
    let c = levi_civita(&m);
    let g2 = (m.dim() == 7).then(|| family(FamilyName::G2Star));
    let mut text = String::new();
    let mut maps = Vec::new();
    for (i, l) in c.maps().iter().enumerate() {
        let inside = g2.map(|s| s.contains_matrix(l));
        write!(text, "Lambda(e{})", i + 1).unwrap();
        if let Some(b) = inside {
            write!(text, " [in g2*: {b}]").unwrap();
        }
        writeln!(text).unwrap();
        text.push_str(&indent(l));
        maps.push(json!({"index": i + 1, "matrix": matrix_json(l), "in_g2star": inside}));
    }
    Ok(Report {
        text,
        json: json!({"dim": m.dim(), "maps": maps}),
        ok: true,
    })
}

pub fn curvature(path: Option<&Path>, gram: Option<&Path>) -> Result<Report> {
    let m = input::metric_algebra(path, gram)?;
    let r = curvature_of(&m, &levi_civita(&m));
    let mut text = String::new();
    let mut entries = Vec::new();
    for ((i, j), x) in r.pairs().filter(|(_, x)| !x.is_zero()) {
        writeln!(text, "R(e{}, e{})", i + 1, j + 1).unwrap();
        text.push_str(&indent(x));
        entries.push(json!({"i": i + 1, "j": j + 1, "matrix": matrix_json(x)}));
    }
    if entries.is_empty() {
        text.push_str("flat: every R(e_i, e_j) vanishes\n");
    }
    Ok(Report {
        text,
        json: json!({"dim": m.dim(), "flat": entries.is_empty(), "nonzero": entries}),
        ok: true,
    })
}

pub fn holonomy(path: Option<&Path>, gram: Option<&Path>) -> Result<Report> {
    let m = input::metric_algebra(path, gram)?;
    let h = holonomy_of(&m, &levi_civita(&m))?;
    let n = m.dim();
    let names: Vec<String> = matching_families(&h)
        .iter()
        .map(ToString::to_string)
        .collect();
    let mut text = format!("dimension {}", h.dim());
    if let Some(first) = names.first() {
        write!(text, ", equals {}", display_family(first)).unwrap();
    }
    text.push('\n');
    let basis: Vec<Value> = h.basis_matrices(n).iter().map(matrix_json).collect();
    for b in h.basis_matrices(n) {
        text.push_str(&indent(&b));
        text.push('\n');
    }
    Ok(Report {
        text,
        json: json!({"dim": h.dim(), "families": names, "basis": basis}),
        ok: true,
    })
}

fn display_family(token: &str) -> String {
    match token {
        "m101" => "m(1,0,1)".into(),
        "m102" => "m(1,0,2)".into(),
        t => t.into(),
    }
}

pub fn bianchi(path: Option<&Path>, gram: Option<&Path>) -> Result<Report> {
    let m = input::metric_algebra(path, gram)?;
    let c = levi_civita(&m);
    let r = curvature_of(&m, &c);
    let first: Vec<Value> = r
        .first_bianchi_defects()
        .iter()
        .map(|(i, j, k)| json!([i + 1, j + 1, k + 1]))
        .collect();
    let second: Vec<Value> = second_bianchi(&m, &c, &r)
        .into_iter()
        .filter(|(_, b)| !b.is_zero())
        .map(|((i, j, k), b)| json!({"triple": [i + 1, j + 1, k + 1], "residual": matrix_json(&b)}))
        .collect();
    let ok = first.is_empty() && second.is_empty();
    let mut text = format!(
        "first Bianchi defects: {}\nsecond Bianchi nonzero residuals: {}\n",
        first.len(),
        second.len()
    );
    if let Some(t) = second.first() {
        writeln!(text, "first nonzero residual at {}", t["triple"]).unwrap();
    }
    Ok(Report {
        text,
        json: json!({"first": first, "second": second, "holds": ok}),
        ok,
    })
}

pub fn classify(token: Option<&str>, path: Option<&Path>, gram: Option<&Path>) -> Result<Report> {
    let h = input::matrix_span(token, path)?;
    let g = match gram {
        Some(p) => input::gram_file(p)?,
        None => standard_gram(),
    };
    let rep = Representation::from_subspace(&h, g)?;
    let r = classify_type(&rep);
    let witness = match &r.indecomposability {
        Indecomposability::Decomposable(w) => {
            Some(w.basis().iter().map(|v| vector_json(v)).collect::<Vec<_>>())
        }
        _ => None,
    };
    let mut text = format!(
        "algebra dimension {}\nenvelope dimension {}\nsocle dimension {} (isotropic: {})\n",
        h.dim(),
        r.envelope_dim,
        r.socle.dim(),
        r.socle_isotropic
    );
    for v in r.socle.basis() {
        writeln!(
            text,
            "  ({})",
            v.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(", ")
        )
        .unwrap();
    }
    writeln!(text, "{}\ntype: {}", r.indecomposability, r.kind).unwrap();
    let socle: Vec<Value> = r.socle.basis().iter().map(|v| vector_json(v)).collect();
    Ok(Report {
        text,
        json: json!({
            "dim": h.dim(),
            "envelope_dim": r.envelope_dim,
            "socle": socle,
            "socle_isotropic": r.socle_isotropic,
            "indecomposability": match r.indecomposability {
                Indecomposability::Indecomposable => "indecomposable",
                Indecomposability::Decomposable(_) => "decomposable",
                Indecomposability::Inconclusive => "inconclusive",
            },
            "witness": witness,
            "type": r.kind.to_string(),
        }),
        ok: true,
    })
}

pub fn kspace(token: Option<&str>, path: Option<&Path>) -> Result<Report> {
    let h = input::matrix_span(token, path)?;
    let k = curvature_space(&h);
    Ok(Report {
        text: format!(
            "algebra dimension {}\ncurvature space dimension {}\n",
            h.dim(),
            k.dim()
        ),
        json: json!({"dim": h.dim(), "kspace_dim": k.dim()}),
        ok: true,
    })
}

pub fn berger(token: Option<&str>, path: Option<&Path>) -> Result<Report> {
    let h = input::matrix_span(token, path)?;
    let b = berger_of(&h);
    Ok(Report {
        text: format!(
            "algebra dimension {}\ncurvature values span dimension {}\nBerger: {}\n",
            h.dim(),
            b.generated.dim(),
            b.is_berger
        ),
        json: json!({"dim": h.dim(), "generated_dim": b.generated.dim(), "berger": b.is_berger}),
        ok: b.is_berger,
    })
}

pub fn deform(
    path: Option<&Path>,
    gram: Option<&Path>,
    abc: [&String; 3],
    time: usize,
) -> Result<Report> {
    let m = input::metric_algebra(path, gram)?;
    if time == 0 || time > m.dim() {
        return Err(Error::Input(format!(
            "--time {time} is not in 1..={}",
            m.dim()
        )));
    }
    let m = m.with_time_direction(time - 1);
    let [a, b, c] = abc.map(|s| input::scalar(s));
    let (a, b, c) = (a?, b?, c?);
    let r = check_deformation_parallel(&m, &a, &b, &c)?;
    let mut text = format!(
        "(a, b, c) = ({a}, {b}, {c})\nM^3 = 0: {}\nA orthogonal: {}\nparallel: {}\n",
        r.nilpotent,
        r.orthogonal,
        r.is_parallel()
    );
    let mut d = Vec::new();
    for (l, x) in r.d.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
        writeln!(text, "D(e{})", l + 1).unwrap();
        text.push_str(&indent(x));
        d.push(json!({"index": l + 1, "matrix": matrix_json(x)}));
    }
    let violations: Vec<Value> = r
        .violations
        .iter()
        .map(|(l, f)| json!({"index": l + 1, "form": f.to_string()}))
        .collect();
    Ok(Report {
        text,
        json: json!({
            "a": a.to_string(), "b": b.to_string(), "c": c.to_string(),
            "nilpotent": r.nilpotent, "orthogonal": r.orthogonal, "parallel": r.is_parallel(),
            "d": d, "violations": violations,
        }),
        ok: r.is_parallel(),
    })
}

pub fn invariant(path: Option<&Path>, gram: Option<&Path>, negative: bool) -> Result<Report> {
    let m = input::metric_algebra(path, gram)?;
    let signs = if negative {
        SignConvention::Negative
    } else {
        SignConvention::Positive
    };
    let f = epsilon_invariant_with(&m, signs)?;
    let mut text = String::new();
    for (name, v) in [("f4", &f.f4), ("f5", &f.f5), ("f6", &f.f6), ("f7", &f.f7)] {
        writeln!(
            text,
            "{name} = ({})",
            v.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(", ")
        )
        .unwrap();
    }
    writeln!(text, "<[f5, f7], f7> = {}", f.value).unwrap();
    Ok(Report {
        text,
        json: json!({
            "f4": vector_json(&f.f4), "f5": vector_json(&f.f5),
            "f6": vector_json(&f.f6), "f7": vector_json(&f.f7),
            "value": f.value.to_string(),
        }),
        ok: true,
    })
}

pub fn example_g_eps(eps: &str) -> Result<Report> {
    let eps: QSqrt2 = input::scalar(eps)?;
    let spec = g_eps(&eps);
    let v = spec.algebra.lie().to_json();
    Ok(Report {
        text: format!(
            "{}\n",
            serde_json::to_string_pretty(&v).expect("serializable")
        ),
        json: v,
        ok: true,
    })
}

pub fn verify() -> Report {
    let suites = run_all_suites();
    let mut text = String::new();
    for s in &suites {
        writeln!(text, "[{}] {s}", if s.passed() { "pass" } else { "FAIL" }).unwrap();
    }
    let ok = suites.iter().all(|s| s.passed());
    Report {
        text,
        json: json!({"passed": ok, "suites": suites.iter().map(|s| s.to_json()).collect::<Vec<_>>()}),
        ok,
    }
}
