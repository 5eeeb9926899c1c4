//! Named kernelization pipelines, as exposed by the command line.

use std::fmt;
use std::str::FromStr;

use crate::classic::{buss_kernelize, crown_kernelize, rule_lp};
use crate::degree::{kernelize_min_degree, kernelize_min_degree_auto};
use crate::error::{Error, Result};
use crate::graph::Instance;
use crate::kernel::KernelOutcome;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Pipeline {
    Buss,
    Crown,
    Lp,
    MinDegree,
    /// Minimum-degree driver with the degree-four replacements.
    MinDegreeAuto,
    /// Buss, crown, LP, then the minimum-degree driver with replacements.
    All,
}

impl Pipeline {
    pub const ALL: [Pipeline; 6] = [
        Pipeline::Buss,
        Pipeline::Crown,
        Pipeline::Lp,
        Pipeline::MinDegree,
        Pipeline::MinDegreeAuto,
        Pipeline::All,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Pipeline::Buss => "buss",
            Pipeline::Crown => "crown",
            Pipeline::Lp => "lp",
            Pipeline::MinDegree => "mindeg",
            Pipeline::MinDegreeAuto => "mindeg+auto",
            Pipeline::All => "all",
        }
    }

    pub fn run(self, inst: Instance) -> Result<KernelOutcome> {
        match self {
            Pipeline::Buss => Ok(buss_kernelize(inst)),
            Pipeline::Crown => Ok(crown_kernelize(inst)),
            Pipeline::Lp => Ok(rule_lp(inst)),
            Pipeline::MinDegree => kernelize_min_degree(inst),
            Pipeline::MinDegreeAuto => kernelize_min_degree_auto(inst),
            Pipeline::All => buss_kernelize(inst)
                .then(crown_kernelize)
                .then(rule_lp)
                .try_then(kernelize_min_degree_auto),
        }
    }
}

impl fmt::Display for Pipeline {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Pipeline {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Pipeline::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown pipeline `{s}`")))
    }
}
