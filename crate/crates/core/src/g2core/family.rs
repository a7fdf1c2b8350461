use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use super::{g2_generators, h_build, HParams};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};
use crate::scalars::QSqrt2;

/// Subalgebras of `gl(2)` acting through the `A` block.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum AFactor {
    Zero,
    Sl2,
    Gl2,
    /// `{(a -b; b a)}`
    Co2,
    /// diagonal matrices
    D,
    /// multiples of `diag(1, 0)`
    RDiag10,
}

impl AFactor {
    pub const ALL: [AFactor; 6] = [
        AFactor::Zero,
        AFactor::Sl2,
        AFactor::Gl2,
        AFactor::Co2,
        AFactor::D,
        AFactor::RDiag10,
    ];

    pub fn token(self) -> &'static str {
        match self {
            AFactor::Zero => "0",
            AFactor::Sl2 => "sl2",
            AFactor::Gl2 => "gl2",
            AFactor::Co2 => "co2",
            AFactor::D => "d",
            AFactor::RDiag10 => "rdiag10",
        }
    }

    /// Basis of the factor as `(a1, a2, a3, a4)` entries.
    pub fn basis(self) -> Vec<[i64; 4]> {
        match self {
            AFactor::Zero => vec![],
            AFactor::Sl2 => vec![[1, 0, 0, -1], [0, 1, 0, 0], [0, 0, 1, 0]],
            AFactor::Gl2 => vec![[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]],
            AFactor::Co2 => vec![[1, 0, 0, 1], [0, -1, 1, 0]],
            AFactor::D => vec![[1, 0, 0, 0], [0, 0, 0, 1]],
            AFactor::RDiag10 => vec![[1, 0, 0, 0]],
        }
    }

    fn from_token(s: &str) -> Option<Self> {
        AFactor::ALL
            .into_iter()
            .find(|a| a.token() == s || (s == "zero" && *a == AFactor::Zero))
    }
}

/// Named subspaces of 7x7 matrices.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum FamilyName {
    G2Star,
    HI,
    HIII,
    M101,
    M102,
    /// `{h(A,0,0,0) : A in a}`
    A(AFactor),
    /// `a ⋉ m(1,0,k)`
    Tfk(AFactor, u8),
}

impl FamilyName {
    pub fn all() -> Vec<FamilyName> {
        let mut v = vec![
            FamilyName::G2Star,
            FamilyName::HI,
            FamilyName::HIII,
            FamilyName::M101,
            FamilyName::M102,
        ];
        v.extend(AFactor::ALL.iter().map(|&a| FamilyName::A(a)));
        v.extend(tfk_list());
        v
    }

    /// Every constructible name, including `a ⋉ m(1,0,k)` combinations
    /// that are not closed under the bracket.
    fn every() -> Vec<FamilyName> {
        let mut v = Self::all();
        for a in AFactor::ALL {
            for k in [1, 2] {
                if !v.contains(&FamilyName::Tfk(a, k)) {
                    v.push(FamilyName::Tfk(a, k));
                }
            }
        }
        v
    }

    pub fn expected_dim(self) -> usize {
        match self {
            FamilyName::G2Star => 14,
            FamilyName::HI => 9,
            FamilyName::HIII => 7,
            FamilyName::M101 => 2,
            FamilyName::M102 => 3,
            FamilyName::A(a) => a.basis().len(),
            FamilyName::Tfk(a, k) => a.basis().len() + 1 + k as usize,
        }
    }

    fn generators(self) -> Vec<Matrix<QSqrt2>> {
        let q = QSqrt2::from_int;
        let z = || q(0);
        let a_gen = |a: [i64; 4]| h_build(&HParams::type3(a.map(q), z(), [z(), z()]));
        let v_gen = || h_build(&HParams::type3([z(), z(), z(), z()], q(1), [z(), z()]));
        let y_gen = |i: usize| {
            let mut y = [z(), z()];
            y[i] = q(1);
            h_build(&HParams::type3([z(), z(), z(), z()], z(), y))
        };
        let u_gen = |i: usize| {
            let mut u = [z(), z()];
            u[i] = q(1);
            h_build(&HParams::new([z(), z(), z(), z()], z(), u, [z(), z()]))
        };
        let m10k = |k: u8| {
            let mut g = vec![v_gen(), y_gen(0)];
            if k == 2 {
                g.push(y_gen(1));
            }
            g
        };
        match self {
            FamilyName::G2Star => g2_generators(),
            FamilyName::M101 => m10k(1),
            FamilyName::M102 => m10k(2),
            FamilyName::HIII => {
                let mut g: Vec<_> = AFactor::Gl2.basis().into_iter().map(a_gen).collect();
                g.extend(m10k(2));
                g
            }
            FamilyName::HI => {
                let mut g = FamilyName::HIII.generators();
                g.push(u_gen(0));
                g.push(u_gen(1));
                g
            }
            FamilyName::A(a) => a.basis().into_iter().map(a_gen).collect(),
            FamilyName::Tfk(a, k) => {
                let mut g: Vec<_> = a.basis().into_iter().map(a_gen).collect();
                g.extend(m10k(k));
                g
            }
        }
    }
}

impl fmt::Display for FamilyName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyName::G2Star => f.write_str("g2star"),
            FamilyName::HI => f.write_str("hI"),
            FamilyName::HIII => f.write_str("hIII"),
            FamilyName::M101 => f.write_str("m101"),
            FamilyName::M102 => f.write_str("m102"),
            FamilyName::A(a) => write!(f, "a_{}", a.token()),
            FamilyName::Tfk(a, k) => write!(f, "{}:{}", a.token(), k),
        }
    }
}

/// Tokens: `g2star`, `hI`, `hIII`, `m101`, `m102`; `sl2`, `gl2`, `co2`,
/// `d`, `rdiag10` for the factor acting on `m(1,0,2)`; `<factor>:<k>` for
/// an explicit `k`; `a_<factor>` for the factor alone.
impl FromStr for FamilyName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let named = match s {
            "g2star" => Some(FamilyName::G2Star),
            "hI" => Some(FamilyName::HI),
            "hIII" => Some(FamilyName::HIII),
            "m101" => Some(FamilyName::M101),
            "m102" => Some(FamilyName::M102),
            _ => None,
        };
        if let Some(n) = named {
            return Ok(n);
        }
        if let Some(rest) = s.strip_prefix("a_") {
            if let Some(a) = AFactor::from_token(rest) {
                return Ok(FamilyName::A(a));
            }
        }
        let (a, k) = match s.split_once(':') {
            Some((a, k)) => (a, k),
            None => (s, "2"),
        };
        let name = match (AFactor::from_token(a), k) {
            (Some(a), "1") => Some(FamilyName::Tfk(a, 1)),
            (Some(a), "2") => Some(FamilyName::Tfk(a, 2)),
            _ => None,
        };
        let explicit_zero = s.contains(':');
        match name {
            Some(n @ FamilyName::Tfk(a, _))
                if tfk_list().contains(&n) && (a != AFactor::Zero || explicit_zero) =>
            {
                Ok(n)
            }
            _ => Err(Error::Input(format!("unknown family token `{s}`"))),
        }
    }
}

static CACHE: OnceLock<HashMap<FamilyName, Subspace>> = OnceLock::new();

/// Canonical span of a named family, computed once per process.
pub fn family(name: FamilyName) -> &'static Subspace {
    let cache = CACHE.get_or_init(|| {
        FamilyName::every()
            .into_iter()
            .map(|n| {
                let gens = n.generators().into_iter().map(Matrix::into_flat);
                (n, Subspace::from_vectors(49, gens))
            })
            .collect()
    });
    &cache[&name]
}

/// The eight algebras `a ⋉ m(1,0,k)` of the type III classification.
pub fn tfk_list() -> Vec<FamilyName> {
    use AFactor::*;
    vec![
        FamilyName::Tfk(Sl2, 2),
        FamilyName::Tfk(Gl2, 2),
        FamilyName::Tfk(Co2, 2),
        FamilyName::Tfk(D, 2),
        FamilyName::Tfk(Zero, 1),
        FamilyName::Tfk(Zero, 2),
        FamilyName::Tfk(RDiag10, 1),
        FamilyName::Tfk(RDiag10, 2),
    ]
}

/// Basis matrices of a family, 7x7.
pub fn family_basis(name: FamilyName) -> Vec<Matrix<QSqrt2>> {
    family(name).basis_matrices(7)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::commutator;

    #[test]
    fn dimensions() {
        for n in FamilyName::all() {
            assert_eq!(family(n).dim(), n.expected_dim(), "{n}");
        }
    }

    #[test]
    fn tokens_round_trip() {
        for n in FamilyName::all() {
            assert_eq!(n.to_string().parse::<FamilyName>().unwrap(), n, "{n}");
        }
        assert_eq!(
            "sl2".parse::<FamilyName>().unwrap(),
            FamilyName::Tfk(AFactor::Sl2, 2)
        );
        assert_eq!(
            "rdiag10".parse::<FamilyName>().unwrap(),
            FamilyName::Tfk(AFactor::RDiag10, 2)
        );
        assert!("so7".parse::<FamilyName>().is_err());
        assert!("0".parse::<FamilyName>().is_err());
        assert!("sl2:1".parse::<FamilyName>().is_err());
        assert_eq!(family(FamilyName::Tfk(AFactor::Sl2, 1)).dim(), 5);
    }

    #[test]
    fn chain_of_containments() {
        let chain = [
            FamilyName::M101,
            FamilyName::M102,
            FamilyName::HIII,
            FamilyName::HI,
            FamilyName::G2Star,
        ];
        for w in chain.windows(2) {
            assert!(
                family(w[1]).contains_subspace(family(w[0])),
                "{} in {}",
                w[0],
                w[1]
            );
        }
        assert_eq!(
            family(FamilyName::Tfk(AFactor::Zero, 2)),
            family(FamilyName::M102)
        );
    }

    #[test]
    fn abelian_pieces() {
        for n in [FamilyName::M101, FamilyName::M102] {
            let b = family_basis(n);
            for x in &b {
                for y in &b {
                    assert!(commutator(x, y).is_zero());
                }
            }
        }
    }

    #[test]
    fn families_are_subalgebras() {
        for n in FamilyName::all() {
            let s = family(n);
            let b = s.basis_matrices(7);
            for x in &b {
                for y in &b {
                    assert!(s.contains_matrix(&x.commutator(y)), "{n}");
                }
            }
        }
    }
}
