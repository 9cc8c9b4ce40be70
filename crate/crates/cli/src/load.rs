//! Resolves command-line object names to values.
//!
//! A name is first tried as a file path. Failing that, its file stem (without
//! `.json` and a kind suffix such as `.map`) is looked up among the built-in
//! fixtures, so `eq3_8.map.json` works from any directory. Representation and
//! bimodule arguments also accept the standard constructions by name.

use std::path::Path;

use malcev_core::fixtures::{self, Fixture};
use malcev_core::reps::left_rep;
use malcev_core::ybe::left_minus_right_dual;
use malcev_core::{io, BilinearForm, Bimodule, LinearMap, LinearRep, StructureTable, TwoTensor};

use crate::CliError;

const SUFFIXES: [&str; 6] = ["alg", "rep", "bim", "map", "r", "form"];

fn stem(name: &str) -> &str {
    let file = name.rsplit(['/', '\\']).next().unwrap_or(name);
    let file = file.strip_suffix(".json").unwrap_or(file);
    match file.rsplit_once('.') {
        Some((head, suffix)) if SUFFIXES.contains(&suffix) => head,
        _ => file,
    }
}

enum Source {
    File(serde_json::Value),
    Builtin(Fixture),
}

fn source(name: &str) -> Result<Source, CliError> {
    let path = Path::new(name);
    if path.is_file() {
        return Ok(Source::File(io::read_json(path)?));
    }
    if let Some(f) = fixtures::lookup(stem(name)) {
        return Ok(Source::Builtin(f));
    }
    Err(CliError::Usage(format!("`{name}` is neither a readable file nor a built-in fixture")))
}

fn wrong_kind(name: &str, expected: &str, f: &Fixture) -> CliError {
    CliError::Usage(format!("built-in `{name}` is a {} fixture, not {expected}", f.suffix()))
}

pub struct Loader {
    pub max_dim: usize,
}

impl Loader {
    fn check_dim(&self, what: &str, dim: usize) -> Result<(), CliError> {
        if dim > self.max_dim {
            return Err(CliError::Usage(format!("{what} has dimension {dim}, above --max-dim {}", self.max_dim)));
        }
        Ok(())
    }

    pub fn algebra(&self, name: &str) -> Result<StructureTable, CliError> {
        let a = match source(name)? {
            Source::File(v) => io::algebra_from_json(&v, name)?,
            Source::Builtin(Fixture::Algebra(a)) => a,
            Source::Builtin(f) => return Err(wrong_kind(name, "an algebra", &f)),
        };
        self.check_dim("algebra", a.dim())?;
        Ok(a)
    }

    fn optional_algebra(&self, name: Option<&str>) -> Result<Option<StructureTable>, CliError> {
        name.map(|n| self.algebra(n)).transpose()
    }

    fn required(&self, algebra: Option<&str>, what: &str) -> Result<StructureTable, CliError> {
        self.optional_algebra(algebra)?
            .ok_or_else(|| CliError::Usage(format!("`{what}` needs --algebra")))
    }

    /// `adjoint`, `coadjoint`, `left` (left multiplications of a pre-Malcev
    /// algebra on itself, as a representation of its commutator), a file or a
    /// built-in.
    pub fn rep(&self, name: &str, algebra: Option<&str>) -> Result<LinearRep, CliError> {
        let r = match name {
            "adjoint" => LinearRep::adjoint(&self.required(algebra, name)?)?,
            "coadjoint" => LinearRep::coadjoint(&self.required(algebra, name)?)?,
            "left" => left_rep(&self.required(algebra, name)?),
            _ => match source(name)? {
                Source::File(v) => io::rep_from_json(&v, name, self.optional_algebra(algebra)?.as_ref())?,
                Source::Builtin(Fixture::Rep(r)) => r,
                Source::Builtin(f) => return Err(wrong_kind(name, "a representation", &f)),
            },
        };
        self.check_dim("representation space", r.space_dim())?;
        self.check_dim("algebra", r.algebra.dim())?;
        Ok(r)
    }

    /// `regular`, `dual-regular`, `left-only`, `left-minus-right-dual` or a file.
    pub fn bimodule(&self, name: &str, algebra: Option<&str>) -> Result<Bimodule, CliError> {
        let b = match name {
            "regular" => Bimodule::regular(&self.required(algebra, name)?),
            "dual-regular" => Bimodule::regular(&self.required(algebra, name)?).dual(),
            "left-only" => Bimodule::left_only(&self.required(algebra, name)?),
            "left-minus-right-dual" => left_minus_right_dual(&self.required(algebra, name)?),
            _ => match source(name)? {
                Source::File(v) => io::bimodule_from_json(&v, name, self.optional_algebra(algebra)?.as_ref())?,
                Source::Builtin(f) => return Err(wrong_kind(name, "a bimodule", &f)),
            },
        };
        self.check_dim("bimodule space", b.space_dim())?;
        self.check_dim("algebra", b.algebra.dim())?;
        Ok(b)
    }

    pub fn map(&self, name: &str) -> Result<LinearMap, CliError> {
        let t = match source(name)? {
            Source::File(v) => io::map_from_json(&v, name)?,
            Source::Builtin(Fixture::Map(t)) => t,
            Source::Builtin(f) => return Err(wrong_kind(name, "a map", &f)),
        };
        self.check_dim("map", t.source_dim().max(t.target_dim()))?;
        Ok(t)
    }

    pub fn tensor(&self, name: &str, algebra: Option<&str>) -> Result<TwoTensor, CliError> {
        let r = match source(name)? {
            Source::File(v) => io::tensor_from_json(&v, name, self.optional_algebra(algebra)?.as_ref())?,
            Source::Builtin(Fixture::Tensor(r)) => r,
            Source::Builtin(f) => return Err(wrong_kind(name, "a tensor", &f)),
        };
        self.check_dim("tensor", r.dim())?;
        Ok(r)
    }

    pub fn form(&self, name: &str, algebra: Option<&str>) -> Result<BilinearForm, CliError> {
        let b = match source(name)? {
            Source::File(v) => io::form_from_json(&v, name, self.optional_algebra(algebra)?.as_ref())?,
            Source::Builtin(Fixture::Form(b)) => b,
            Source::Builtin(f) => return Err(wrong_kind(name, "a form", &f)),
        };
        self.check_dim("form", b.algebra.dim())?;
        Ok(b)
    }
}

#[cfg(test)]
mod tests {
    use super::stem;

    #[test]
    fn stems() {
        assert_eq!(stem("eq3_8.map.json"), "eq3_8");
        assert_eq!(stem("fixtures/example2_1.alg.json"), "example2_1");
        assert_eq!(stem("example3_5.r.json"), "example3_5");
        assert_eq!(stem("sl2"), "sl2");
        assert_eq!(stem("missing.json"), "missing");
    }
}
