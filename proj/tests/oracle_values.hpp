#pragma once

// Frozen output of oracles/derive_expected.py (mpmath, 40 digits).
namespace oracle {

inline constexpr double kBoostT = 1.25;
inline constexpr double kBoostX = -0.75;

inline constexpr double kCosh06 = 1.25;
inline constexpr double kSinh06 = 0.75;
inline constexpr double kCoshHalf06 = 1.060660171779821286601266543157273558927;
inline constexpr double kSinhHalf06 = 0.3535533905932737622004221810524245196424;

inline constexpr double kSigmaAtPi = -3.141592653589793238462643383279502884197;

inline constexpr double kLatticeGamma = 1.154700538379251529018297561003914911295;
inline constexpr double kLatticeDx = 10.8827961854053071035644695458529343937;
inline constexpr double kLatticeDt = 5.441398092702653551782234772926467196852;
inline constexpr double kLatticeDxUnitMass = 12.56637061435917295385057353311801153679;
inline constexpr double kLatticeDtUnitMass = 6.283185307179586476925286766559005768394;

inline constexpr double kLadderAtPi = -1.570796326794896619231321691639751442099;

inline constexpr double kProcaLongitudinal = 1.41421356237309504880168872420969807857;

inline constexpr double kGammaFdErrorOrder2 = 6.666666666666666666666666666666666666667e-7;

}  // namespace oracle
