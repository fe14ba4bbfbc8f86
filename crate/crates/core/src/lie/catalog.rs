//! Named algebras: Heisenberg algebras, `s5_45`, the affine algebras and
//! their trivial extensions, and abelian algebras.

use std::fmt;
use std::str::FromStr;

use super::{LieAlgebra, LieError};
use crate::linalg::{rat, Matrix, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CatalogName {
    Heisenberg,
    S545,
    AffR,
    AffC,
    AffRPlusR,
    AffCPlusR,
    Abelian,
}

impl CatalogName {
    pub const ALL: [CatalogName; 7] = [
        Self::Heisenberg,
        Self::S545,
        Self::AffR,
        Self::AffC,
        Self::AffRPlusR,
        Self::AffCPlusR,
        Self::Abelian,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Self::Heisenberg => "heisenberg",
            Self::S545 => "s5_45",
            Self::AffR => "aff_r",
            Self::AffC => "aff_c",
            Self::AffRPlusR => "aff_r_plus_r",
            Self::AffCPlusR => "aff_c_plus_r",
            Self::Abelian => "abelian",
        }
    }

    /// Whether the entry takes a size parameter.
    pub fn is_parametric(self) -> bool {
        matches!(self, Self::Heisenberg | Self::Abelian)
    }
}

impl fmt::Display for CatalogName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CatalogName {
    type Err = LieError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| LieError::UnknownCatalog(s.to_string()))
    }
}

/// Looks up a catalog entry. `param` is `m` for `heisenberg` (dimension
/// `2m + 1`) and `n` for `abelian`; the other entries take none.
pub fn catalog(name: CatalogName, param: Option<usize>) -> Result<LieAlgebra, LieError> {
    let need =
        |what: &str| param.ok_or_else(|| LieError::BadParams(format!("{name} needs {what}")));
    if !name.is_parametric() && param.is_some() {
        return Err(LieError::BadParams(format!("{name} takes no parameter")));
    }
    match name {
        CatalogName::Heisenberg => heisenberg(need("m ≥ 1")?),
        CatalogName::Abelian => Ok(abelian(need("a dimension")?)),
        CatalogName::S545 => Ok(s5_45()),
        CatalogName::AffR => Ok(aff_r()),
        CatalogName::AffC => Ok(aff_c()),
        CatalogName::AffRPlusR => Ok(aff_r_plus_r()),
        CatalogName::AffCPlusR => Ok(aff_c_plus_r()),
    }
}

/// `h_{2m+1}`: `[xᵢ, yᵢ] = z`.
pub fn heisenberg(m: usize) -> Result<LieAlgebra, LieError> {
    if m == 0 {
        return Err(LieError::BadParams("heisenberg needs m ≥ 1".into()));
    }
    let n = 2 * m + 1;
    let mut labels: Vec<String> = (1..=m).map(|i| format!("x{i}")).collect();
    labels.extend((1..=m).map(|i| format!("y{i}")));
    labels.push("z".into());
    let brackets: Vec<(usize, usize, Vec<Rational>)> = (0..m)
        .map(|i| {
            let mut v = vec![rat(0); n];
            v[n - 1] = rat(1);
            (i, m + i, v)
        })
        .collect();
    LieAlgebra::from_brackets(labels, &brackets)
}

pub fn s5_45() -> LieAlgebra {
    LieAlgebra::from_table(
        &["x1", "x2", "y1", "y2", "z"],
        &[
            ("x1", "y1", &[("y1", 1)]),
            ("x1", "y2", &[("y2", 1)]),
            ("x1", "z", &[("z", 2)]),
            ("x2", "y1", &[("y2", 1)]),
            ("x2", "y2", &[("y1", -1)]),
            ("y1", "y2", &[("z", 1)]),
        ],
    )
    .expect("static table")
}

/// `[x, y] = y`.
pub fn aff_r() -> LieAlgebra {
    LieAlgebra::semidirect_sum(1, 1, &[Matrix::identity(1)]).expect("static table")
}

/// The real form of the complex affine algebra: `x₁` acts as the identity
/// on `⟨y₁, y₂⟩` and `x₂` as a rotation generator.
pub fn aff_c() -> LieAlgebra {
    let rotation = Matrix::from_i64(&[&[0, -1], &[1, 0]]);
    LieAlgebra::semidirect_sum(2, 2, &[Matrix::identity(2), rotation]).expect("static table")
}

pub fn abelian(n: usize) -> LieAlgebra {
    let labels = if n == 1 {
        vec!["t".to_string()]
    } else {
        (1..=n).map(|i| format!("t{i}")).collect()
    };
    LieAlgebra::abelian_on(labels).expect("distinct labels")
}

pub fn aff_r_plus_r() -> LieAlgebra {
    LieAlgebra::direct_sum(&aff_r(), &abelian(1))
}

pub fn aff_c_plus_r() -> LieAlgebra {
    LieAlgebra::direct_sum(&aff_c(), &abelian(1))
}
