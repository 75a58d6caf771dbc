//! On-disk JSON formats: the spinor file and the mapping parameter file.

use elko_core::elko::{Conjugacy, ElkoLabel, HelicityPair, Momentum};
use elko_core::gamma::Spinor;
use elko_core::mapping::MappingParams;
use elko_core::Complex64;
use serde::{Deserialize, Serialize};

use crate::CliError;

/// A spinor on disk: four [re, im] pairs plus optional momentum and
/// label metadata.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SpinorFile {
    pub components: Vec<[f64; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub momentum: Option<MomentumSpec>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<LabelSpec>,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct MomentumSpec {
    pub mass: f64,
    pub p: [f64; 3],
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LabelSpec {
    /// "S" (self-conjugate) or "A" (anti self-conjugate).
    pub conjugacy: String,
    /// "mp" (upper helicity -, lower +) or "pm".
    pub pair: String,
}

impl SpinorFile {
    pub fn from_spinor(psi: &Spinor) -> Self {
        Self {
            components: psi.0.iter().map(|c| [c.re, c.im]).collect(),
            momentum: None,
            label: None,
        }
    }

    pub fn validate(&self) -> Result<(), CliError> {
        if self.components.len() != 4 {
            return Err(CliError::validation(format!(
                "components: expected exactly 4 [re, im] pairs, got {}",
                self.components.len()
            )));
        }
        for (i, pair) in self.components.iter().enumerate() {
            if !pair[0].is_finite() || !pair[1].is_finite() {
                return Err(CliError::validation(format!(
                    "components[{i}]: non-finite number"
                )));
            }
        }
        if let Some(m) = &self.momentum {
            if !(m.mass > 0.0) || !m.mass.is_finite() {
                return Err(CliError::validation(format!(
                    "momentum.mass: must be a positive finite number, got {}",
                    m.mass
                )));
            }
            if m.p.iter().any(|x| !x.is_finite()) {
                return Err(CliError::validation("momentum.p: non-finite component"));
            }
        }
        if let Some(l) = &self.label {
            parse_label(&l.conjugacy, &l.pair)?;
        }
        Ok(())
    }

    pub fn spinor(&self) -> Spinor {
        let mut c = [Complex64::new(0.0, 0.0); 4];
        for (i, pair) in self.components.iter().enumerate() {
            c[i] = Complex64::new(pair[0], pair[1]);
        }
        Spinor::new(c)
    }

    pub fn momentum(&self) -> Option<Momentum> {
        self.momentum.as_ref().map(|m| Momentum::new(m.mass, m.p))
    }

    pub fn elko_label(&self) -> Result<Option<ElkoLabel>, CliError> {
        match &self.label {
            Some(l) => Ok(Some(parse_label(&l.conjugacy, &l.pair)?)),
            None => Ok(None),
        }
    }
}

pub fn parse_label(conjugacy: &str, pair: &str) -> Result<ElkoLabel, CliError> {
    let conjugacy = match conjugacy {
        "S" => Conjugacy::S,
        "A" => Conjugacy::A,
        other => {
            return Err(CliError::validation(format!(
                "label.conjugacy: expected \"S\" or \"A\", got \"{other}\""
            )))
        }
    };
    let pair = match pair {
        "mp" => HelicityPair::MinusPlus,
        "pm" => HelicityPair::PlusMinus,
        other => {
            return Err(CliError::validation(format!(
                "label.pair: expected \"mp\" or \"pm\", got \"{other}\""
            )))
        }
    };
    Ok(ElkoLabel { conjugacy, pair })
}

pub fn label_spec(label: ElkoLabel) -> LabelSpec {
    LabelSpec {
        conjugacy: match label.conjugacy {
            Conjugacy::S => "S",
            Conjugacy::A => "A",
        }
        .into(),
        pair: match label.pair {
            HelicityPair::MinusPlus => "mp",
            HelicityPair::PlusMinus => "pm",
        }
        .into(),
    }
}

/// Mapping parameter file: the eight free complex entries as [re, im]
/// pairs. Epsilon comes from the command line.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ParamFile {
    pub m11: [f64; 2],
    pub m12: [f64; 2],
    pub m21: [f64; 2],
    pub m22: [f64; 2],
    pub m31: [f64; 2],
    pub m32: [f64; 2],
    pub m41: [f64; 2],
    pub m42: [f64; 2],
}

impl ParamFile {
    pub fn params(&self, epsilon: f64) -> Result<MappingParams, CliError> {
        let c = |p: [f64; 2], name: &str| -> Result<Complex64, CliError> {
            if p.iter().any(|x| !x.is_finite()) {
                return Err(CliError::validation(format!("{name}: non-finite entry")));
            }
            Ok(Complex64::new(p[0], p[1]))
        };
        Ok(MappingParams {
            m11: c(self.m11, "m11")?,
            m12: c(self.m12, "m12")?,
            m21: c(self.m21, "m21")?,
            m22: c(self.m22, "m22")?,
            m31: c(self.m31, "m31")?,
            m32: c(self.m32, "m32")?,
            m41: c(self.m41, "m41")?,
            m42: c(self.m42, "m42")?,
            epsilon,
            enforce_convention: false,
        })
    }
}

pub fn read_spinor_file(path: &str) -> Result<SpinorFile, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::validation(format!("{path}: {e}")))?;
    let file: SpinorFile = serde_json::from_str(&text)
        .map_err(|e| CliError::validation(format!("{path}: {e}")))?;
    file.validate()?;
    Ok(file)
}

pub fn read_param_file(path: &str) -> Result<ParamFile, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::validation(format!("{path}: {e}")))?;
    serde_json::from_str(&text).map_err(|e| CliError::validation(format!("{path}: {e}")))
}
