#pragma once

#include <string>

#include "resprime/certificate.hpp"

namespace resprime {

// Runs the checker named by the certificate on its recorded inputs. Root
// enclosures come from the certificate when env is in replay mode. Throws
// ShapeViolation for an unknown criterion or missing inputs.
Certificate rerun(const Certificate& cert, CheckEnv& env);

struct VerifyResult {
  bool ok = false;
  std::string message;
};

// Digest check, then an independent re-run whose canonical text must match
// the stored body byte for byte, then every recorded comparison re-evaluated.
VerifyResult verify_certificate(const Certificate& cert);

}  // namespace resprime
