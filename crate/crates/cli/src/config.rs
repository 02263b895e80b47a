//! Optional JSON config preloading common parameters. Command-line flags
//! take precedence.

use std::fs;
use std::path::Path;

use anyhow::Context;
use serde::Deserialize;

use nfblocks::geometry::Sites;

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    pub q: Option<u32>,
    pub m: Option<usize>,
    pub budget: Option<usize>,
    #[serde(default, deserialize_with = "sites_or_path")]
    pub sites: Option<Sites>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum SitesSpec {
    Inline(Sites),
    Path(String),
}

fn sites_or_path<'de, D: serde::Deserializer<'de>>(d: D) -> Result<Option<Sites>, D::Error> {
    match Option::<SitesSpec>::deserialize(d)? {
        None => Ok(None),
        Some(SitesSpec::Inline(s)) => Ok(Some(s)),
        Some(SitesSpec::Path(p)) => read_sites(Path::new(&p)).map(Some).map_err(serde::de::Error::custom),
    }
}

impl Config {
    pub fn load(path: &Path) -> anyhow::Result<Self> {
        let raw = fs::read_to_string(path).with_context(|| format!("reading config {}", path.display()))?;
        serde_json::from_str(&raw).with_context(|| format!("parsing config {}", path.display()))
    }
}

pub fn read_sites(path: &Path) -> anyhow::Result<Sites> {
    let raw = fs::read_to_string(path).with_context(|| format!("reading sites {}", path.display()))?;
    serde_json::from_str(&raw).with_context(|| format!("parsing sites {}", path.display()))
}
