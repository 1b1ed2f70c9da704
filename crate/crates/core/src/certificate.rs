//! JSON certificates. Reading a certificate always revalidates it against its host graph.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::canon::isomorphic;
use crate::color::{check_proper, find_coloring, Coloring};
use crate::error::CertificateError;
use crate::graph::{Graph, VertexSet};
use crate::graph6;
use crate::minor::{find_model, find_rooted_model, validate_model, Model};
use crate::patterns::{Pattern, RootMode, RootSpec};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum Certificate {
    /// `bags[u]` is the bag of pattern vertex `u`; `roots` maps pattern roots to host roots.
    Model { graph: String, pattern: String, bags: Vec<Vec<usize>>, roots: BTreeMap<usize, usize> },
    Coloring { graph: String, k: usize, colors: Vec<usize> },
    /// The host is isomorphic to the named pattern graph.
    Exception { graph: String, tag: String },
    /// An exact search for the pattern (with these roots) or a `k`-coloring found nothing.
    NoneFound {
        graph: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        pattern: Option<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        k: Option<usize>,
        #[serde(default, skip_serializing_if = "Vec::is_empty")]
        roots: Vec<usize>,
    },
}

impl Certificate {
    pub fn from_model(m: &Model) -> Certificate {
        Certificate::Model {
            graph: graph6::emit(&m.host),
            pattern: m.pattern.name(),
            bags: m.bags.iter().map(|b| b.to_vec()).collect(),
            roots: m.root_binding.iter().copied().collect(),
        }
    }

    pub fn from_coloring(g: &Graph, c: &Coloring) -> Certificate {
        Certificate::Coloring { graph: graph6::emit(g), k: c.k(), colors: c.colors().to_vec() }
    }

    pub fn exception(g: &Graph, tag: &str) -> Certificate {
        Certificate::Exception { graph: graph6::emit(g), tag: tag.to_string() }
    }

    pub fn no_model(g: &Graph, p: &Pattern, roots: &[usize]) -> Certificate {
        Certificate::NoneFound { graph: graph6::emit(g), pattern: Some(p.name()), k: None, roots: roots.to_vec() }
    }

    pub fn no_coloring(g: &Graph, k: usize) -> Certificate {
        Certificate::NoneFound { graph: graph6::emit(g), pattern: None, k: Some(k), roots: Vec::new() }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Certificate::Model { .. } => "model",
            Certificate::Coloring { .. } => "coloring",
            Certificate::Exception { .. } => "exception",
            Certificate::NoneFound { .. } => "none-found",
        }
    }

    pub fn graph6(&self) -> &str {
        match self {
            Certificate::Model { graph, .. }
            | Certificate::Coloring { graph, .. }
            | Certificate::Exception { graph, .. }
            | Certificate::NoneFound { graph, .. } => graph,
        }
    }

    pub fn graph(&self) -> Result<Graph, CertificateError> {
        Ok(graph6::parse(self.graph6())?)
    }

    /// Rebuilds the model of a `model` certificate without validating it.
    pub fn to_model(&self) -> Result<Model, CertificateError> {
        let Certificate::Model { pattern, bags, roots, .. } = self else {
            return Err(CertificateError::Schema(format!("expected a model certificate, got {}", self.kind())));
        };
        let host = self.graph()?;
        let mut pattern = Pattern::parse(pattern)?;
        for bag in bags {
            if let Some(&x) = bag.iter().find(|&&x| x >= host.n()) {
                return Err(CertificateError::Schema(format!("bag vertex {x} is outside the host")));
            }
        }
        let bags: Vec<VertexSet> = bags.iter().map(|b| b.iter().copied().collect()).collect();
        let keys: Vec<usize> = roots.keys().copied().collect();
        if !keys.is_empty() && VertexSet::from_vertices(keys.iter().copied()) != pattern.roots().as_set() {
            let mode = match pattern.roots().mode {
                RootMode::None => RootMode::Unordered,
                mode => mode,
            };
            pattern = pattern.with_roots(RootSpec { mode, indices: keys })?;
        }
        let root_binding = if roots.is_empty() {
            Vec::new()
        } else {
            pattern.roots().indices.iter().filter_map(|p| roots.get(p).map(|&x| (*p, x))).collect()
        };
        Ok(Model { host, pattern, bags, root_binding })
    }

    /// Checks the payload against the host graph.
    pub fn revalidate(&self) -> Result<(), CertificateError> {
        let g = self.graph()?;
        match self {
            Certificate::Model { .. } => {
                validate_model(&self.to_model()?)?;
            }
            Certificate::Coloring { k, colors, .. } => check_proper(&g, colors, *k)?,
            Certificate::Exception { tag, .. } => {
                let p = Pattern::parse(tag)?;
                if !isomorphic(&g, p.graph()) {
                    return Err(CertificateError::Revalidation(format!("graph is not isomorphic to {tag}")));
                }
            }
            Certificate::NoneFound { pattern, k, roots, .. } => match (pattern, k) {
                (Some(name), None) => {
                    let p = Pattern::parse(name)?;
                    let found = if roots.is_empty() {
                        find_model(&g, &p).is_some()
                    } else {
                        find_rooted_model(&g, &p, roots)
                            .map_err(|e| CertificateError::Revalidation(e.to_string()))?
                            .is_some()
                    };
                    if found {
                        return Err(CertificateError::Revalidation(format!("a {name} model exists")));
                    }
                }
                (None, Some(k)) => {
                    if find_coloring(&g, *k).is_some() {
                        return Err(CertificateError::Revalidation(format!("a {k}-coloring exists")));
                    }
                }
                _ => {
                    return Err(CertificateError::Schema("none-found needs exactly one of pattern and k".into()));
                }
            },
        }
        Ok(())
    }
}

pub fn write_certificate(c: &Certificate) -> String {
    serde_json::to_string(c).expect("certificates serialize")
}

/// Parses and revalidates one certificate.
pub fn read_certificate(text: &str) -> Result<Certificate, CertificateError> {
    let c: Certificate = serde_json::from_str(text)?;
    c.revalidate()?;
    Ok(c)
}

/// Parses and revalidates a JSON array of certificates, a single certificate,
/// or one certificate per line.
pub fn read_certificates(text: &str) -> Result<Vec<Certificate>, CertificateError> {
    let trimmed = text.trim();
    if trimmed.starts_with('[') {
        let all: Vec<Certificate> = serde_json::from_str(trimmed)?;
        for c in &all {
            c.revalidate()?;
        }
        return Ok(all);
    }
    if let Ok(c) = serde_json::from_str::<Certificate>(trimmed) {
        c.revalidate()?;
        return Ok(vec![c]);
    }
    trimmed.lines().filter(|l| !l.trim().is_empty()).map(read_certificate).collect()
}
