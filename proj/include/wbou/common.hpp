#pragma once

namespace wbou {

/// Clock of the driver inside the kernel integral.
///  natural: X_t = int exp(-lambda |t - u|) dL_u
///  scaled:  X_t = int exp(-lambda |t - u|) dL_{lambda u}; the marginal law of X
///           no longer depends on lambda (volatility-model convention).
enum class TimeScale { natural, scaled };

}  // namespace wbou
