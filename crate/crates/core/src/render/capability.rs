use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::effects::EffectKind;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BackendKind {
    /// Immediate mode, canvas-like.
    Raster,
    /// Retained mode, svg-like.
    SceneGraph,
    /// Retained mode with the reduced vml-like effect set.
    Legacy,
}

impl BackendKind {
    pub const ALL: [BackendKind; 3] = [BackendKind::Raster, BackendKind::SceneGraph, BackendKind::Legacy];

    pub fn name(self) -> &'static str {
        match self {
            BackendKind::Raster => "raster",
            BackendKind::SceneGraph => "scenegraph",
            BackendKind::Legacy => "legacy",
        }
    }

    pub fn is_retained(self) -> bool {
        !matches!(self, BackendKind::Raster)
    }

    pub fn capabilities(self) -> CapabilityMatrix {
        CapabilityMatrix::for_backend(self)
    }
}

impl fmt::Display for BackendKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("unknown backend `{0}` (expected raster, scenegraph or legacy)")]
pub struct UnknownBackend(pub String);

impl FromStr for BackendKind {
    type Err = UnknownBackend;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        BackendKind::ALL.into_iter().find(|b| b.name() == s).ok_or_else(|| UnknownBackend(s.to_owned()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Support {
    Supported,
    FallbackNeeded,
}

/// Effects a backend can express natively.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CapabilityMatrix {
    supported: BTreeSet<EffectKind>,
}

impl CapabilityMatrix {
    pub fn for_backend(backend: BackendKind) -> Self {
        use EffectKind::*;
        let missing: &[EffectKind] = match backend {
            BackendKind::Raster => &[],
            // "?" rows count as unsupported
            BackendKind::SceneGraph => &[Emboss, RedEye, FlipH, FlipV],
            BackendKind::Legacy => &[Hue, Saturate, Sepia, Sharpen, RedEye],
        };
        Self { supported: EffectKind::ALL.into_iter().filter(|k| !missing.contains(k)).collect() }
    }

    pub fn supports(&self, kind: EffectKind) -> bool {
        self.supported.contains(&kind)
    }

    pub fn unsupported(&self) -> impl Iterator<Item = EffectKind> + '_ {
        EffectKind::ALL.into_iter().filter(|k| !self.supports(*k))
    }
}

pub fn capability_check(backend: BackendKind, kind: EffectKind) -> Support {
    if backend.capabilities().supports(kind) {
        Support::Supported
    } else {
        Support::FallbackNeeded
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_examples() {
        assert_eq!(capability_check(BackendKind::Legacy, EffectKind::Sepia), Support::FallbackNeeded);
        assert_eq!(capability_check(BackendKind::Raster, EffectKind::RedEye), Support::Supported);
        assert_eq!(capability_check(BackendKind::SceneGraph, EffectKind::Hue), Support::Supported);
        assert_eq!(capability_check(BackendKind::Legacy, EffectKind::Invert), Support::Supported);
    }

    #[test]
    fn unsupported_sets() {
        let sg: Vec<_> = BackendKind::SceneGraph.capabilities().unsupported().collect();
        assert_eq!(sg, [EffectKind::Emboss, EffectKind::FlipH, EffectKind::FlipV, EffectKind::RedEye]);
        assert_eq!(BackendKind::Raster.capabilities().unsupported().count(), 0);
        assert_eq!(BackendKind::Legacy.capabilities().unsupported().count(), 5);
    }

    #[test]
    fn names_parse() {
        for b in BackendKind::ALL {
            assert_eq!(b.name().parse::<BackendKind>().unwrap(), b);
        }
        assert!("canvas".parse::<BackendKind>().is_err());
    }
}
