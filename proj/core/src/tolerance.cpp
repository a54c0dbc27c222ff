#include "cstar/tolerance.hpp"

#include "cstar/errors.hpp"

namespace cstar {

void ToleranceConfig::validate() const {
    const bool ok = herm_tol > 0 && psd_tol > 0 && recon_tol > 0 && eq_tol > 0 && inv_tol > 0;
    if (!ok) throw ConfigError("ToleranceConfig: all tolerances must be strictly positive");
}

ToleranceConfig ToleranceConfig::scaled(double eq) {
    if (!(eq > 0)) throw ConfigError("ToleranceConfig::scaled: eq_tol must be positive");
    const ToleranceConfig base{};
    const double r = eq / base.eq_tol;
    return ToleranceConfig{base.herm_tol * r, base.psd_tol * r, base.recon_tol * r, eq,
                           base.inv_tol * r};
}

}  // namespace cstar
