//! Built-in code registry and file loading.
//!
//! `load` resolves a name or path to a parity-check matrix: a built-in
//! name (`array-2209`, `wifi-1944-r56`, the trapping-set fixtures), a file
//! in the directory named by `ERRORFLOOR_DATA_DIR`, or a direct path to an
//! `.alist` or `.bm` (base-matrix) file.

use std::path::Path;

use thiserror::Error;

use crate::code::{build_array_code, parse_alist, CodeError, ParityCheckMatrix, QcBaseMatrix};
use crate::fixtures;

/// Environment variable naming a directory searched for `<name>.alist` or
/// `<name>.bm` before the built-ins.
pub const DATA_DIR_ENV: &str = "ERRORFLOOR_DATA_DIR";

const WIFI_1944_R56: &str = include_str!("../data/wifi_1944_r56.bm");

#[derive(Debug, Error)]
pub enum RegistryError {
    #[error("unknown code {0:?}; built-ins are {1:?} and paths must end in .alist or .bm")]
    Unknown(String, &'static [&'static str]),
    #[error("reading {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error(transparent)]
    Code(#[from] CodeError),
}

pub const BUILTIN_NAMES: &[&str] = &[
    "array-2209",
    "wifi-1944-r56",
    "fixture-type1-3-3",
    "fixture-type2-8-6",
    "fixture-type3-6-8",
];

fn builtin(name: &str) -> Option<Result<ParityCheckMatrix, RegistryError>> {
    match name {
        "array-2209" => Some(build_array_code(5, 47, 47).map_err(Into::into).map(|mut h| {
            h.set_code_id("array-2209");
            h
        })),
        "wifi-1944-r56" => Some(
            QcBaseMatrix::parse(WIFI_1944_R56)
                .and_then(|base| base.expand("wifi-1944-r56"))
                .map_err(Into::into),
        ),
        "fixture-type1-3-3" => Some(Ok(fixtures::type_i_code())),
        "fixture-type2-8-6" => Some(Ok(fixtures::type_ii_code())),
        "fixture-type3-6-8" => Some(Ok(fixtures::type_iii_code())),
        _ => None,
    }
}

fn load_file(path: &Path) -> Result<ParityCheckMatrix, RegistryError> {
    let text = std::fs::read_to_string(path).map_err(|source| RegistryError::Io {
        path: path.display().to_string(),
        source,
    })?;
    let id = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "file".to_string());
    let mut h = if path.extension().is_some_and(|e| e == "bm") {
        QcBaseMatrix::parse(&text)?.expand(id.clone())?
    } else {
        parse_alist(&text)?
    };
    h.set_code_id(id);
    Ok(h)
}

/// Resolve a code source: data-dir override, then built-in name, then
/// filesystem path.
pub fn load(source: &str) -> Result<ParityCheckMatrix, RegistryError> {
    if let Ok(dir) = std::env::var(DATA_DIR_ENV) {
        for ext in ["alist", "bm"] {
            let candidate = Path::new(&dir).join(format!("{source}.{ext}"));
            if candidate.is_file() {
                return load_file(&candidate);
            }
        }
    }
    if let Some(result) = builtin(source) {
        return result;
    }
    let path = Path::new(source);
    if path.is_file() {
        return load_file(path);
    }
    Err(RegistryError::Unknown(source.to_string(), BUILTIN_NAMES))
}
