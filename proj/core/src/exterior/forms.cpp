#include "crprime/exterior/forms.hpp"

namespace crprime {

template class DifferentialForm<LogExpr>;
template class DifferentialForm<GradedSeries>;
template class VectorField<LogExpr>;
template class VectorField<GradedSeries>;
template struct AdaptedCoframe<LogExpr>;
template struct AdaptedCoframe<GradedSeries>;

}  // namespace crprime
