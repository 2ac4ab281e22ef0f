//! Optional key-value config file for tolerance defaults.
//!
//! Lines of the form `key = value`; `#` starts a comment. Recognized keys:
//! `rel_tol`, `abs_tol` (quadrature) and `tol` (solver). Command-line
//! flags always win over file values.

use std::path::Path;

#[derive(Clone, Copy, Debug, Default)]
pub struct FileConfig {
    pub rel_tol: Option<f64>,
    pub abs_tol: Option<f64>,
    pub tol: Option<f64>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self, String> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read config {}: {e}", path.display()))?;
        let mut config = FileConfig::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| format!("config line {}: expected `key = value`", lineno + 1))?;
            let value: f64 = value
                .trim()
                .parse()
                .map_err(|_| format!("config line {}: bad number", lineno + 1))?;
            match key.trim() {
                "rel_tol" => config.rel_tol = Some(value),
                "abs_tol" => config.abs_tol = Some(value),
                "tol" => config.tol = Some(value),
                other => return Err(format!("config line {}: unknown key `{other}`", lineno + 1)),
            }
        }
        Ok(config)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    #[test]
    fn parses_keys_and_comments() {
        let dir = std::env::temp_dir();
        let path = dir.join("vm1d_config_test.cfg");
        let mut f = std::fs::File::create(&path).unwrap();
        writeln!(f, "# tolerances").unwrap();
        writeln!(f, "rel_tol = 1e-10").unwrap();
        writeln!(f, "tol = 1e-8  # solver").unwrap();
        drop(f);
        let c = FileConfig::load(&path).unwrap();
        assert_eq!(c.rel_tol, Some(1e-10));
        assert_eq!(c.abs_tol, None);
        assert_eq!(c.tol, Some(1e-8));
        std::fs::remove_file(&path).ok();
    }

    #[test]
    fn rejects_unknown_keys() {
        let dir = std::env::temp_dir();
        let path = dir.join("vm1d_config_bad.cfg");
        std::fs::write(&path, "bogus = 1\n").unwrap();
        assert!(FileConfig::load(&path).is_err());
        std::fs::remove_file(&path).ok();
    }
}
