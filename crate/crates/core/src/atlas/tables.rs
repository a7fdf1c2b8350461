use std::collections::BTreeMap;
use std::fmt;

use serde_json::Value;

use crate::g2core::{family, h_build, h_project, FamilyName, HParams};
use crate::geometry::{Connection, CurvatureTensor};
use crate::liealg::LieAlgebraData;
use crate::linalg::{rank, Matrix, Subspace};
use crate::repanalysis::curvature_space;
use crate::scalars::{MultiPoly, QSqrt2, Ring};

const BRACKETS_HIII: &str = include_str!("../../fixtures/brackets_hIII.json");
const BRACKETS_RDIAG10: &str = include_str!("../../fixtures/brackets_rdiag10.json");
const TABLE1: &str = include_str!("../../fixtures/table1.json");

/// One compared item: both sides printed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EntryCheck {
    pub label: String,
    pub matches: bool,
    pub expected: String,
    pub derived: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableCheckResult {
    pub table: String,
    pub entries: Vec<EntryCheck>,
}

impl TableCheckResult {
    pub(crate) fn new(table: &str) -> Self {
        TableCheckResult {
            table: table.into(),
            entries: vec![],
        }
    }

    pub(crate) fn push(
        &mut self,
        label: impl Into<String>,
        expected: impl fmt::Display,
        derived: impl fmt::Display,
        matches: bool,
    ) {
        self.entries.push(EntryCheck {
            label: label.into(),
            matches,
            expected: expected.to_string(),
            derived: derived.to_string(),
        });
    }

    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.matches)
    }

    pub fn first_mismatch(&self) -> Option<&EntryCheck> {
        self.entries.iter().find(|e| !e.matches)
    }

    pub fn to_json(&self) -> Value {
        serde_json::json!({
            "table": self.table,
            "passed": self.passed(),
            "entries": self.entries.len(),
            "first_mismatch": self.first_mismatch().map(|e| serde_json::json!({
                "label": e.label, "expected": e.expected, "derived": e.derived,
            })),
        })
    }
}

impl fmt::Display for TableCheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ok = self.entries.iter().filter(|e| e.matches).count();
        write!(
            f,
            "{}: {}/{} entries match",
            self.table,
            ok,
            self.entries.len()
        )?;
        if let Some(e) = self.first_mismatch() {
            write!(
                f,
                "; first mismatch {}: expected {}, derived {}",
                e.label, e.expected, e.derived
            )?;
        }
        Ok(())
    }
}

/// Shapes of connections whose brackets are tabulated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BracketShape {
    /// `Λ_i = h(A_i, v_i, y_i)`
    HIII,
    /// `Λ_i = h(diag(a_i1, a_i4), v_i, (0, u_i2), y_i)`
    RDiag10,
}

impl BracketShape {
    pub fn token(self) -> &'static str {
        match self {
            BracketShape::HIII => "hIII",
            BracketShape::RDiag10 => "rdiag10",
        }
    }

    fn fixture(self) -> &'static str {
        match self {
            BracketShape::HIII => BRACKETS_HIII,
            BracketShape::RDiag10 => BRACKETS_RDIAG10,
        }
    }
}

fn var(name: String) -> MultiPoly {
    MultiPoly::var(&name)
}

/// Generic element of `h^III` with variables `a{i}1..a{i}4`, `v{i}`,
/// `y{i}1`, `y{i}2`.
pub fn symbolic_h3(i: usize) -> HParams<MultiPoly> {
    HParams::type3(
        std::array::from_fn(|k| var(format!("a{i}{}", k + 1))),
        var(format!("v{i}")),
        std::array::from_fn(|k| var(format!("y{i}{}", k + 1))),
    )
}

fn symbolic_params(shape: BracketShape, i: usize) -> HParams<MultiPoly> {
    match shape {
        BracketShape::HIII => symbolic_h3(i),
        BracketShape::RDiag10 => HParams::new(
            [
                var(format!("a{i}1")),
                MultiPoly::zero(),
                MultiPoly::zero(),
                var(format!("a{i}4")),
            ],
            var(format!("v{i}")),
            [MultiPoly::zero(), var(format!("u{i}2"))],
            std::array::from_fn(|k| var(format!("y{i}{}", k + 1))),
        ),
    }
}

/// `Λ_i` for `i = 1..7` as symbolic matrices.
pub fn symbolic_connection(shape: BracketShape) -> Connection<MultiPoly> {
    Connection::new(
        (1..=7)
            .map(|i| h_build(&symbolic_params(shape, i)))
            .collect(),
    )
}

fn parse_poly_table(text: &str) -> LieAlgebraData<MultiPoly> {
    let v: Value = serde_json::from_str(text).expect("fixture is valid JSON");
    LieAlgebraData::from_json_with(&v, MultiPoly::parse).expect("fixture is a bracket table")
}

/// Brackets forced by torsion-freeness, `[e_i, e_j] = Λ_i e_j - Λ_j e_i`,
/// against the transcribed table.
pub fn verify_bracket_table(shape: BracketShape) -> TableCheckResult {
    verify_bracket_table_against(shape, &reference_brackets(shape))
}

/// The transcribed reference table for a shape.
pub fn reference_brackets(shape: BracketShape) -> LieAlgebraData<MultiPoly> {
    parse_poly_table(shape.fixture())
}

/// Derived brackets for `shape` compared with an arbitrary table.
pub fn verify_bracket_table_against(
    shape: BracketShape,
    table: &LieAlgebraData<MultiPoly>,
) -> TableCheckResult {
    let derived = symbolic_connection(shape).induced_bracket();
    let mut out = TableCheckResult::new(&format!("brackets {}", shape.token()));
    for i in 0..7 {
        for j in i + 1..7 {
            let d = derived.bracket_basis(i, j);
            let t = table.bracket_basis(i, j);
            out.push(
                format!("[e{}, e{}]", i + 1, j + 1),
                table.format_vector(&t),
                derived.format_vector(&d),
                d == t,
            );
        }
    }
    out
}

fn pair_of(v: &Value) -> (usize, usize) {
    let a = v.as_array().expect("pair array");
    let i = a[0].as_u64().expect("index") as usize - 1;
    let j = a[1].as_u64().expect("index") as usize - 1;
    (i, j)
}

fn poly(v: &Value) -> MultiPoly {
    MultiPoly::parse(v.as_str().expect("token")).expect("fixture token parses")
}

/// `R_pair = sum c R_other`.
type Relation = ((usize, usize), Vec<(QSqrt2, (usize, usize))>);

struct Table1 {
    parameters: Vec<String>,
    tensor: CurvatureTensor<MultiPoly>,
    zero: Vec<(usize, usize)>,
    relations: Vec<Relation>,
}

/// The tabulated curvature tensor with values in `h^III`, with `R37`
/// filled in from its relation.
pub fn table1_tensor() -> CurvatureTensor<MultiPoly> {
    load_table1().tensor
}

/// Parameter names of the tabulated curvature tensor.
pub fn table1_parameters() -> Vec<String> {
    load_table1().parameters
}

fn load_table1() -> Table1 {
    let v: Value = serde_json::from_str(TABLE1).expect("fixture is valid JSON");
    let parameters = v["parameters"]
        .as_array()
        .expect("parameters")
        .iter()
        .map(|p| p.as_str().expect("name").to_string())
        .collect();
    let mut map = BTreeMap::new();
    for row in v["rows"].as_array().expect("rows") {
        let a = row["A"].as_array().expect("A");
        let y = row["y"].as_array().expect("y");
        let p = HParams::type3(
            std::array::from_fn(|k| poly(&a[k])),
            poly(&row["v"]),
            [poly(&y[0]), poly(&y[1])],
        );
        map.insert(pair_of(&row["pair"]), h_build(&p));
    }
    let zero = v["zero"]
        .as_array()
        .expect("zero")
        .iter()
        .map(pair_of)
        .collect();
    let relations: Vec<Relation> = v["relations"]
        .as_array()
        .expect("relations")
        .iter()
        .map(|r| {
            let terms = r["combination"]
                .as_array()
                .expect("combination")
                .iter()
                .map(|t| {
                    let c = QSqrt2::parse(t[0].as_str().expect("coefficient")).expect("scalar");
                    (c, pair_of(&t[1]))
                })
                .collect();
            (pair_of(&r["pair"]), terms)
        })
        .collect();
    // pairs defined only through a relation
    for (pair, terms) in &relations {
        if !map.contains_key(pair) {
            let mut acc = Matrix::zeros(7, 7);
            for (c, p) in terms {
                acc = acc.add(&map[p].scale(c));
            }
            map.insert(*pair, acc);
        }
    }
    Table1 {
        parameters,
        tensor: CurvatureTensor::from_pairs(7, map),
        zero,
        relations,
    }
}

fn flatten(r: &CurvatureTensor<QSqrt2>) -> Vec<QSqrt2> {
    let mut out = Vec::with_capacity(21 * 49);
    for i in 0..7 {
        for j in i + 1..7 {
            out.extend(r.get(i, j).into_flat());
        }
    }
    out
}

fn specialize(
    t: &CurvatureTensor<MultiPoly>,
    binding: &BTreeMap<String, QSqrt2>,
) -> CurvatureTensor<QSqrt2> {
    let map = t
        .pairs()
        .map(|(ij, m)| {
            (
                ij,
                m.map(|p| p.evaluate(binding).expect("all parameters bound")),
            )
        })
        .collect();
    CurvatureTensor::from_pairs(7, map)
}

/// Compares the computed space of formal curvature tensors with values in
/// `h^III` against the transcribed parametrization.
pub fn verify_table1() -> TableCheckResult {
    let k = curvature_space(family(FamilyName::HIII));
    let table = load_table1();
    let mut out = TableCheckResult::new("curvature table h^III");
    out.push("dimension", 16, k.dim(), k.dim() == 16);
    for &(i, j) in &table.zero {
        let bad = k.basis.iter().filter(|r| !r.get(i, j).is_zero()).count();
        out.push(
            format!("R{}{} = 0", i + 1, j + 1),
            "0 on every basis tensor",
            format!("{bad} nonzero"),
            bad == 0,
        );
    }
    for (pair, terms) in &table.relations {
        let label = format!(
            "R{}{} = {}",
            pair.0 + 1,
            pair.1 + 1,
            terms
                .iter()
                .map(|(c, p)| format!("({c}) R{}{}", p.0 + 1, p.1 + 1))
                .collect::<Vec<_>>()
                .join(" + ")
        );
        let bad = k
            .basis
            .iter()
            .filter(|r| {
                let mut acc = Matrix::zeros(7, 7);
                for (c, p) in terms {
                    acc = acc.add(&r.get(p.0, p.1).scale(c));
                }
                acc != r.get(pair.0, pair.1)
            })
            .count();
        out.push(
            label,
            "holds on every basis tensor",
            format!("{bad} violations"),
            bad == 0,
        );
    }
    let images: Vec<Vec<QSqrt2>> = table
        .parameters
        .iter()
        .map(|p| {
            let binding = table
                .parameters
                .iter()
                .map(|q| {
                    (
                        q.clone(),
                        if q == p {
                            QSqrt2::one()
                        } else {
                            QSqrt2::zero()
                        },
                    )
                })
                .collect();
            flatten(&specialize(&table.tensor, &binding))
        })
        .collect();
    let param_rank = rank(&Matrix::from_rows(images.clone()));
    out.push(
        "parameters independent",
        table.parameters.len(),
        param_rank,
        param_rank == table.parameters.len(),
    );
    let tabulated = Subspace::from_vectors(21 * 49, images);
    let computed = Subspace::from_vectors(21 * 49, k.basis.iter().map(flatten));
    out.push(
        "parametrized tensors span the computed space",
        format!("dim {}", computed.dim()),
        format!("dim {}, equal: {}", tabulated.dim(), tabulated == computed),
        tabulated == computed,
    );
    out
}

fn check_poly(out: &mut TableCheckResult, label: String, expected: &str, derived: MultiPoly) {
    let e = MultiPoly::parse(expected).expect("identity parses");
    let ok = e == derived;
    out.push(label, e, derived, ok);
}

/// `-(∇_{e_r} R)(e_j, e_k) = R(Λ_r e_j, e_k) + R(e_j, Λ_r e_k) - [Λ_r, R_jk]`.
fn minus_nabla(
    lambda: &Matrix<MultiPoly>,
    r: &CurvatureTensor<MultiPoly>,
    j: usize,
    k: usize,
) -> Matrix<MultiPoly> {
    let e = |m| crate::linalg::unit::<MultiPoly>(7, m);
    r.eval(&lambda.column(j), &e(k))
        .add(&r.eval(&e(j), &lambda.column(k)))
        .sub(&lambda.commutator(&r.get(j, k)))
}

/// Polynomial identities displayed in the type III analysis: two Jacobi
/// components under the `h^III` bracket table and the Bianchi projections
/// obtained from a tabulated curvature tensor.
pub fn verify_proof_identities() -> TableCheckResult {
    let mut out = TableCheckResult::new("proof identities");
    let g = symbolic_connection(BracketShape::HIII).induced_bracket();
    let j145 = g.jacobiator(0, 3, 4);
    check_poly(
        &mut out,
        "J145 component e4".into(),
        "2*v1^2 - r2*v4*tr(A1)",
        j145[3].clone(),
    );
    check_poly(
        &mut out,
        "J145 component e5".into(),
        "(tr(A4) - r2*v1)*tr(A1)",
        j145[4].clone(),
    );

    let r = load_table1().tensor;
    for idx in [1usize, 4] {
        let lambda = h_build(&symbolic_h3(idx));
        let p56 = h_project(&minus_nabla(&lambda, &r, 4, 5)).expect("values stay in h^III");
        let p57 = h_project(&minus_nabla(&lambda, &r, 4, 6)).expect("values stay in h^III");
        let p67 = h_project(&minus_nabla(&lambda, &r, 5, 6)).expect("values stay in h^III");
        check_poly(
            &mut out,
            format!("tr pro_A(-(nabla_{idx} R)(e5,e6))"),
            &format!("(-2*a{idx}1 - a{idx}4)*(b1 + b4) - a{idx}2*(b3 + c4)"),
            p56.trace(),
        );
        check_poly(
            &mut out,
            format!("tr pro_A(-(nabla_{idx} R)(e5,e7))"),
            &format!("(-a{idx}1 - 2*a{idx}4)*(b3 + c4) - a{idx}3*(b1 + b4)"),
            p57.trace(),
        );
        // (A_r + 2 tr(A_r) I)(w1, w2) - v_r (tr A56, tr A57)
        let rhs = [
            format!("(3*a{idx}1 + 2*a{idx}4)*w1 + a{idx}2*w2 - v{idx}*(b1 + b4)"),
            format!("a{idx}3*w1 + (2*a{idx}1 + 3*a{idx}4)*w2 - v{idx}*(b3 + c4)"),
        ];
        for (c, expected) in rhs.iter().enumerate() {
            check_poly(
                &mut out,
                format!("pro_y(-(nabla_{idx} R)(e6,e7)) component {}", c + 1),
                expected,
                p67.y[c].clone(),
            );
        }
    }
    out
}

/// Every table and identity suite.
pub fn run_all_suites() -> Vec<TableCheckResult> {
    vec![
        verify_bracket_table(BracketShape::HIII),
        verify_bracket_table(BracketShape::RDiag10),
        verify_table1(),
        verify_proof_identities(),
        super::family_suite::verify_example_family(),
    ]
}
