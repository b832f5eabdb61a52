use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde_json::{json, Value};
use sha2::{Digest, Sha256};

pub const ENV_VAR: &str = "KIRILLOV_CACHE_DIR";

pub struct Cache {
    dir: PathBuf,
}

pub enum Lookup {
    Hit(Value),
    Miss,
    Corrupt(String),
}

/// Hash of the command, its normalized inputs and the artifact version.
pub fn key(command: &str, inputs: &Value, version: &str) -> String {
    let mut h = Sha256::new();
    h.update(command.as_bytes());
    h.update([0]);
    h.update(inputs.to_string().as_bytes());
    h.update([0]);
    h.update(version.as_bytes());
    hex::encode(h.finalize())
}

impl Cache {
    pub fn open(dir: &Path) -> std::io::Result<Self> {
        fs::create_dir_all(dir)?;
        Ok(Cache {
            dir: dir.to_path_buf(),
        })
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.json"))
    }

    pub fn get(&self, key: &str) -> Lookup {
        let bytes = match fs::read(self.path(key)) {
            Ok(b) => b,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Lookup::Miss,
            Err(e) => return Lookup::Corrupt(e.to_string()),
        };
        let entry: Value = match serde_json::from_slice(&bytes) {
            Ok(v) => v,
            Err(e) => return Lookup::Corrupt(e.to_string()),
        };
        match (
            entry.get("key").and_then(Value::as_str),
            entry.get("result"),
        ) {
            (Some(k), Some(result)) if k == key => Lookup::Hit(result.clone()),
            _ => Lookup::Corrupt("entry does not match its key".into()),
        }
    }

    pub fn put(&self, key: &str, result: &Value) -> std::io::Result<()> {
        let tmp = self.dir.join(format!(".{key}.{}.tmp", std::process::id()));
        let mut f = fs::File::create(&tmp)?;
        f.write_all(
            json!({ "key": key, "result": result })
                .to_string()
                .as_bytes(),
        )?;
        f.sync_all()?;
        fs::rename(tmp, self.path(key))
    }
}
