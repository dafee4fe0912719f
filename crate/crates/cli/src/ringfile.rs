//! Ring description files.
//!
//! ```toml
//! [ring]
//! field = "GF(7)"
//! vars  = ["x1", "x2"]
//! ideal = ["x1^2 + x2^2", "x1*x2"]
//! order = "grevlex"
//! [elements]
//! u = "x1 + x2"
//! ```
//!
//! Instead of `ideal`, a file may give `inverse_system = "x1*x2*x3"`; the ring is then
//! the apolar algebra of that form.

use std::collections::BTreeMap;
use std::path::Path;

use serde::Deserialize;

use ezd_core::parse::validate_vars;
use ezd_core::ring::inverse_system_ring;
use ezd_core::{build_ring, parse_polynomial, ArtinianRing, FieldSpec, MonomialOrder, Polynomial, RingElement};

use crate::CliError;

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingSection {
    pub field: String,
    pub vars: Vec<String>,
    #[serde(default)]
    pub ideal: Option<Vec<String>>,
    #[serde(default)]
    pub inverse_system: Option<String>,
    #[serde(default)]
    pub order: Option<String>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingFile {
    pub ring: RingSection,
    #[serde(default)]
    pub elements: BTreeMap<String, String>,
}

/// A parsed file together with its ring.
pub struct LoadedRing {
    pub file: RingFile,
    pub ring: ArtinianRing,
}

impl RingFile {
    pub fn parse(src: &str) -> Result<Self, CliError> {
        toml::from_str(src).map_err(|e| CliError::Input(format!("malformed ring file: {e}")))
    }

    pub fn read(path: &Path) -> Result<Self, CliError> {
        let src = std::fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&src)
    }

    /// Builds the ring; `order` overrides the file's own order.
    pub fn build(self, order: Option<MonomialOrder>) -> Result<LoadedRing, CliError> {
        let field: FieldSpec = self.ring.field.parse()?;
        let order = match (order, &self.ring.order) {
            (Some(o), _) => o,
            (None, Some(s)) => s.parse().map_err(CliError::Input)?,
            (None, None) => MonomialOrder::default(),
        };
        validate_vars(&self.ring.vars)?;
        for name in self.elements.keys() {
            if self.ring.vars.contains(name) {
                return Err(CliError::Input(format!("element name {name:?} shadows a variable")));
            }
        }
        let vars = &self.ring.vars;
        let ring = match (&self.ring.ideal, &self.ring.inverse_system) {
            (Some(ideal), None) => {
                let gens = ideal
                    .iter()
                    .map(|g| parse_polynomial(g, vars, field, order))
                    .collect::<ezd_core::Result<Vec<Polynomial>>>()?;
                build_ring(field, vars, &gens, order)?
            }
            (None, Some(form)) => {
                let f = parse_polynomial(form, vars, field, order)?;
                inverse_system_ring(field, vars, &f)?
            }
            _ => {
                return Err(CliError::Input(
                    "[ring] needs exactly one of `ideal` and `inverse_system`".into(),
                ))
            }
        };
        Ok(LoadedRing { file: self, ring })
    }
}

impl LoadedRing {
    pub fn load(path: &Path, order: Option<MonomialOrder>) -> Result<Self, CliError> {
        RingFile::read(path)?.build(order)
    }

    /// A named element from `[elements]`, or a polynomial in the ring variables.
    pub fn element(&self, src: &str) -> Result<RingElement, CliError> {
        let src = src.trim();
        let text = self.file.elements.get(src).map_or(src, String::as_str);
        Ok(self.ring.parse_element(text)?)
    }

    /// `;`-separated list; empty entries are skipped.
    pub fn elements(&self, list: &str) -> Result<Vec<RingElement>, CliError> {
        list.split(';')
            .filter(|s| !s.trim().is_empty())
            .map(|s| self.element(s))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const EX2: &str = r#"
[ring]
field = "GF(7)"
vars  = ["x1", "x2"]
ideal = ["x1^2 + x2^2", "x1*x2"]
order = "grevlex"
[elements]
u = "x1 + x2"
"#;

    #[test]
    fn parses_and_builds() {
        let r = RingFile::parse(EX2).unwrap().build(None).unwrap();
        assert_eq!(r.ring.length(), 4);
        assert_eq!(r.element("u").unwrap(), r.ring.parse_element("x1 + x2").unwrap());
        assert_eq!(r.elements("x1; ;u").unwrap().len(), 2);
    }

    #[test]
    fn rejects_bad_files() {
        assert!(RingFile::parse("[ring]\nfield = \"GF(7)\"").is_err());
        let both = EX2.replace("order = \"grevlex\"", "inverse_system = \"x1*x2\"");
        assert!(RingFile::parse(&both).unwrap().build(None).is_err());
        let shadow = EX2.replace("u = ", "x1 = ");
        assert!(RingFile::parse(&shadow).unwrap().build(None).is_err());
        let extra = EX2.replace("[elements]", "colour = 1\n[elements]");
        assert!(RingFile::parse(&extra).is_err());
    }

    #[test]
    fn inverse_system_files() {
        let src = "[ring]\nfield = \"GF(7)\"\nvars = [\"x1\", \"x2\", \"x3\"]\ninverse_system = \"x1*x2*x3\"\n";
        let r = RingFile::parse(src).unwrap().build(None).unwrap();
        assert_eq!(r.ring.length(), 8);
    }
}
