#pragma once

#include "hyperlog/checks.hpp"

namespace hyperlog::detail {

// Each returns a report with params, grids, tally and details filled in;
// the registry sets id, title and catches failures.

VerificationReport check_bern(const CheckOptions& o);
VerificationReport check_kmvthm(const CheckOptions& o);
VerificationReport check_ssthm2(const CheckOptions& o);
VerificationReport check_ssthm(const CheckOptions& o);
VerificationReport check_mylemma1(const CheckOptions& o);

VerificationReport check_f_ratio_part(const CheckOptions& o, int part);
VerificationReport check_pvlem(const CheckOptions& o);
VerificationReport check_kulemma(const CheckOptions& o);
VerificationReport check_mylemma2(const CheckOptions& o);

VerificationReport check_2ndmain(const CheckOptions& o);
VerificationReport check_finrmk1(const CheckOptions& o);
VerificationReport check_ssthm5(const CheckOptions& o);
VerificationReport check_myrmk43(const CheckOptions& o);
VerificationReport check_ssthm55(const CheckOptions& o);
VerificationReport check_my49(const CheckOptions& o);
VerificationReport check_logconlemma(const CheckOptions& o);
VerificationReport check_logcor(const CheckOptions& o);
VerificationReport check_logcor1(const CheckOptions& o);
VerificationReport check_logconcave(const CheckOptions& o);
VerificationReport check_t_bound(const CheckOptions& o);
VerificationReport check_ssthm7(const CheckOptions& o);

SweepResult sweep_myq3(const CheckOptions& o);
SweepResult sweep_my44(const CheckOptions& o);
SweepResult sweep_my46(const CheckOptions& o);
SweepResult sweep_omega(const CheckOptions& o);

}  // namespace hyperlog::detail
