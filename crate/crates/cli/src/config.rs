//! Run configuration and model construction.

use std::fmt;

use clap::{Args, ValueEnum};
use cluster_cone::{
    CartanFamily, CartanType, Classical, ClusterData, FrozenMode, ModelSpec, PolygonModel,
    RootModel,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModelChoice {
    Polygon,
    Root,
    /// Polygon for A, B, C, D and root otherwise.
    Auto,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FrozenChoice {
    Special,
    None,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Debug, Args)]
pub struct RunConfig {
    /// Cartan family: A, B, C, D, E, F or G.
    #[arg(long, short = 'f')]
    pub family: CartanFamily,
    #[arg(long, short = 'r')]
    pub rank: usize,
    /// Frozen variables; defaults to `special` for polygon models and `none`
    /// for root models.
    #[arg(long, value_enum)]
    pub frozen: Option<FrozenChoice>,
    #[arg(long, value_enum, default_value = "auto")]
    pub model: ModelChoice,
    /// Coxeter element as a comma-separated order of simple reflections
    /// (1-based), applied right to left. Root model only.
    #[arg(long, value_delimiter = ',')]
    pub order: Option<Vec<usize>>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    /// Write output to this file instead of stdout.
    #[arg(long)]
    pub out: Option<std::path::PathBuf>,
    /// Include the long E7 and E8 runs.
    #[arg(long)]
    pub long: bool,
}

/// A configuration that cannot be run. Reported with exit code 2.
#[derive(Debug)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

pub enum Model {
    Polygon(PolygonModel),
    Root(RootModel),
}

impl Model {
    pub fn data(&self) -> cluster_cone::Result<ClusterData> {
        match self {
            Model::Polygon(m) => m.cluster_data(),
            Model::Root(m) => m.cluster_data(),
        }
    }

    pub fn frozen(&self) -> FrozenMode {
        match self {
            Model::Polygon(m) => m.spec().frozen(),
            Model::Root(_) => FrozenMode::None,
        }
    }
}

fn classical(f: CartanFamily) -> Option<Classical> {
    match f {
        CartanFamily::A => Some(Classical::A),
        CartanFamily::B => Some(Classical::B),
        CartanFamily::C => Some(Classical::C),
        CartanFamily::D => Some(Classical::D),
        _ => None,
    }
}

impl RunConfig {
    pub fn classical(&self) -> Option<Classical> {
        classical(self.family)
    }

    pub fn uses_polygon(&self) -> Result<bool, UsageError> {
        match (self.model, self.classical()) {
            (ModelChoice::Polygon, None) => Err(UsageError(format!(
                "no polygon model for family {}",
                self.family.letter()
            ))),
            (ModelChoice::Polygon, Some(_)) => Ok(true),
            (ModelChoice::Root, _) => Ok(false),
            (ModelChoice::Auto, c) => Ok(c.is_some()),
        }
    }

    pub fn frozen_mode(&self) -> Result<FrozenMode, UsageError> {
        let polygon = self.uses_polygon()?;
        match (self.frozen, polygon) {
            (Some(FrozenChoice::Special), false) => Err(UsageError(
                "root models have no frozen variables".into(),
            )),
            (Some(FrozenChoice::Special), true) | (None, true) => Ok(FrozenMode::Special),
            (Some(FrozenChoice::None), _) | (None, false) => Ok(FrozenMode::None),
        }
    }

    pub fn polygon_spec(&self) -> Result<ModelSpec, UsageError> {
        let family = self.classical().ok_or_else(|| {
            UsageError(format!("no polygon model for family {}", self.family.letter()))
        })?;
        ModelSpec::new(family, self.rank, self.frozen_mode()?)
            .map_err(|e| UsageError(e.to_string()))
    }

    pub fn root_model(&self) -> Result<RootModel, UsageError> {
        let t = CartanType::new(self.family, self.rank).map_err(|e| UsageError(e.to_string()))?;
        let model = match &self.order {
            Some(order) => {
                if order.iter().any(|&i| i == 0) {
                    return Err(UsageError("order entries are 1-based".into()));
                }
                RootModel::with_order(t, order.iter().map(|i| i - 1).collect())
            }
            None => RootModel::new(t),
        };
        model.map_err(|e| UsageError(e.to_string()))
    }

    pub fn build(&self) -> Result<Model, UsageError> {
        if self.uses_polygon()? {
            if self.order.is_some() {
                return Err(UsageError("--order applies to root models only".into()));
            }
            Ok(Model::Polygon(PolygonModel::new(self.polygon_spec()?)))
        } else {
            self.frozen_mode()?;
            Ok(Model::Root(self.root_model()?))
        }
    }
}
