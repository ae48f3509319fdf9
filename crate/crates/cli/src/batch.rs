use partheta::identities::{verify, IdentityCase, VerificationRecord};
use partheta::par::{par_map, with_threads};
use partheta::Result;

use crate::report::Format;

/// A validated set of verification jobs.
#[derive(Debug, Clone)]
pub struct BatchJob {
    pub jobs: Vec<IdentityCase>,
    pub output_format: Format,
    pub parallelism: usize,
}

impl BatchJob {
    /// Validate every job up front; the error names the first bad job.
    pub fn new(
        jobs: Vec<IdentityCase>,
        output_format: Format,
        parallelism: usize,
    ) -> std::result::Result<Self, String> {
        if parallelism == 0 {
            return Err("parallelism must be at least 1".into());
        }
        for (i, job) in jobs.iter().enumerate() {
            job.validate().map_err(|e| {
                if jobs.len() == 1 {
                    e.to_string()
                } else {
                    format!("job {} ({}): {e}", i + 1, job.identity)
                }
            })?;
        }
        Ok(Self {
            jobs,
            output_format,
            parallelism,
        })
    }

    /// Records in input order.
    pub fn run(&self) -> Vec<Result<VerificationRecord>> {
        with_threads(self.parallelism, || par_map(&self.jobs, verify))
    }
}
