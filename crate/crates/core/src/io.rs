//! JSON documents describing partial acts and globalizations.
//!
//! An act document is
//!
//! ```json
//! {"semigroup": {"size": 2, "table": [[0, 1], [1, 1]]},
//!  "act": {"size": 2, "table": [[0, null], [1, 1]]}}
//! ```
//!
//! with optional `"names"` arrays. Row indices are the left operand (or act
//! element), columns the semigroup element, all indices 0-based. A
//! globalization document gives a global act over the same semigroup and an
//! embedding:
//!
//! ```json
//! {"global": {"size": 3, "table": [[0, 2], [1, 1], [2, 2]]}, "iota": [0, 1]}
//! ```

use std::sync::Arc;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::act::{Act, GlobalAct, PartialAct};
use crate::error::{Error, Result};
use crate::semigroup::Semigroup;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SemigroupDoc {
    pub size: usize,
    pub table: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PartialActDoc {
    pub size: usize,
    pub table: Vec<Vec<Option<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GlobalActDoc {
    pub size: usize,
    pub table: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActDocument {
    pub semigroup: SemigroupDoc,
    pub act: PartialActDoc,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GlobDocument {
    pub global: GlobalActDoc,
    pub iota: Vec<usize>,
}

/// A validated act document.
#[derive(Debug, Clone)]
pub struct Parsed {
    pub semigroup: Arc<Semigroup>,
    pub act: PartialAct,
    pub semigroup_names: Option<Vec<String>>,
    pub act_names: Option<Vec<String>>,
}

fn from_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

fn check_names(names: &Option<Vec<String>>, what: &'static str, expected: usize) -> Result<()> {
    match names {
        Some(v) if v.len() != expected => Err(Error::TableShape {
            what,
            expected,
            found: v.len(),
        }),
        _ => Ok(()),
    }
}

fn check_rows<T>(rows: &[Vec<T>], declared: usize, width: usize, what: &'static str) -> Result<()> {
    if rows.len() != declared {
        return Err(Error::TableShape {
            what,
            expected: declared,
            found: rows.len(),
        });
    }
    match rows.iter().find(|r| r.len() != width) {
        Some(r) => Err(Error::TableShape {
            what,
            expected: width,
            found: r.len(),
        }),
        None => Ok(()),
    }
}

impl SemigroupDoc {
    pub fn build(&self) -> Result<Semigroup> {
        if self.size == 0 {
            return Err(Error::EmptySemigroup);
        }
        check_rows(&self.table, self.size, self.size, "semigroup table")?;
        check_names(&self.names, "semigroup names", self.size)?;
        Semigroup::new(self.table.clone())
    }

    pub fn from_semigroup(s: &Semigroup) -> Self {
        SemigroupDoc {
            size: s.size(),
            table: s.rows(),
            names: None,
        }
    }
}

impl ActDocument {
    pub fn parse(text: &str) -> Result<Parsed> {
        from_json::<ActDocument>(text)?.build()
    }

    pub fn build(&self) -> Result<Parsed> {
        let semigroup = Arc::new(self.semigroup.build()?);
        check_rows(&self.act.table, self.act.size, semigroup.size(), "act table")?;
        check_names(&self.act.names, "act names", self.act.size)?;
        let act = PartialAct::new(semigroup.clone(), self.act.table.clone())?;
        Ok(Parsed {
            semigroup,
            act,
            semigroup_names: self.semigroup.names.clone(),
            act_names: self.act.names.clone(),
        })
    }

    pub fn from_act(act: &PartialAct) -> Self {
        ActDocument {
            semigroup: SemigroupDoc::from_semigroup(act.semigroup()),
            act: PartialActDoc {
                size: act.size(),
                table: act.rows(),
                names: None,
            },
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }
}

impl GlobDocument {
    /// Parses a globalization document. A report carrying a
    /// `"globalization"` member is accepted too.
    pub fn parse(text: &str) -> Result<Self> {
        let value: serde_json::Value = from_json(text)?;
        let inner = match value.get("globalization") {
            Some(g) => g.clone(),
            None => value,
        };
        serde_json::from_value(inner).map_err(|e| Error::Parse {
            line: 0,
            column: 0,
            message: e.to_string(),
        })
    }

    /// Validates against the semigroup and the size of the partial act.
    pub fn build(&self, semigroup: &Arc<Semigroup>) -> Result<GlobalAct> {
        check_rows(
            &self.global.table,
            self.global.size,
            semigroup.size(),
            "global act table",
        )?;
        check_names(&self.global.names, "global act names", self.global.size)?;
        GlobalAct::new(semigroup.clone(), self.global.table.clone())
    }

    pub fn from_parts(global: &GlobalAct, iota: &[usize]) -> Self {
        GlobDocument {
            global: GlobalActDoc {
                size: global.size(),
                table: global.rows(),
                names: None,
            },
            iota: iota.to_vec(),
        }
    }
}

/// Lowercase hex SHA-256 of the given bytes.
pub fn content_hash(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}
