#pragma once
#include <filesystem>
#include <string>
#include <string_view>

#include "weyllab/config.hpp"

namespace weyllab {

/// 17-significant-digit decimal text; negative zero canonicalized to "0".
std::string format_double(double v);

/// Write-then-rename so readers never observe a partial file.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

/// CSV `w,re_c1,im_c1,envelope,local_energy`: the first spinor component as a
/// function of the comoving coordinate. 1-D families only.
std::string waveform_csv(const RunConfig& cfg);

/// CSV `x,y,Bz,p,p_inv`: the surviving z magnetic field next to the
/// distribution and its inverse, on the transverse map grid.
std::string fieldmap_csv(const RunConfig& cfg);

/// CSV `x,y,Ex,Ey,Ez,Bx,By,Bz`: closed-form fields of the configured family
/// and gauge function on the map grid at the configured (t, z) slice.
std::string fields_csv(const RunConfig& cfg);

/// CSV observable profiles along the comoving coordinate:
/// `w,density,sx,sy,sz,total_spin` for Dirac, `w,density,helicity` for Weyl.
std::string observables_csv(const RunConfig& cfg);

struct VerificationOutcome {
    bool pass = false;
    double max_residual = 0.0;
    double mean_residual = 0.0;
    std::string report_json;  // fixed-schema report, LF-terminated
};

/// Full verification of one configuration: degeneracy sweep over sampled
/// gauge functions (s = 0 baseline included), pointwise annihilator identity,
/// convergence-order estimate, field cross-check, and inverted negative
/// controls.
VerificationOutcome run_verification(const RunConfig& cfg);

} // namespace weyllab
