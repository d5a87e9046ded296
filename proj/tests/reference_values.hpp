// Auto-generated by tools/oracles/reference_values.py -- do not edit.
// High-precision reference values (mpmath, 40 digits).
#pragma once

namespace refvals {

// Gamma function spot values
inline constexpr double kGamma_0_25 = 3.62560990822190831193068515587;
inline constexpr double kGamma_1_25 = 0.906402477055477077982671288967;
inline constexpr double kGamma_5_3 = 0.902745292950933611296858685436;
inline constexpr double kGamma_2_5 = 1.32934038817913702047362561251;

// Half-line second-difference normalization constant
inline constexpr double kCs_0_5001 = 0.318336791005137874283460025739;
inline constexpr double kCs_0_51 = 0.320895642710647215895252223237;
inline constexpr double kCs_0_6 = 0.333549429912248113855925701713;
inline constexpr double kCs_0_75 = 0.299206710301074508454959544951;
inline constexpr double kCs_0_9 = 0.164904938818302724898991634897;
inline constexpr double kCs_0_99 = 0.0196325966875817824210428925552;

// Uniform operator bound constant c(s)
inline constexpr double kUnifC_0_6 = 6.31957995835116727336142372161;
inline constexpr double kUnifC_0_75 = 2.39365368240859606763967635961;
inline constexpr double kUnifC_0_9 = 1.35995857060169111771162878533;

// Truncation tail weights eps^{-2s}/(2s)
inline constexpr double kTail_1_075 = 0.666666666666666666666666666667;
inline constexpr double kTail_05_075 = 1.88561808316412673173558496561;

// Ray integral of exp(-|x|^2) from (1,0) along (1,0), eps=0.01, s=0.75
inline constexpr double kRayGauss = -12.762410916070934519335399719;

// int_0^inf (2 cos h - 2) h^{-2.5} dh (= -1/C_s by the Fourier symbol;
// frozen as the closed form, numerically confirmed below 1e-12)
inline constexpr double kPairCos0 = -3.34217103284133400322102037975;

// 1D fractional heat operator of exp(-x^2) at several radii (s=0.75)
inline constexpr double kFlapGauss_0 = -1.44640908463207714253570144984;
inline constexpr double kFlapGauss_0_5 = -0.694857855402578102974236814667;
inline constexpr double kFlapGauss_1 = 0.345726954203371306610824007225;
inline constexpr double kFlapGauss_2 = 0.268511898072213817916443333308;

// Annulus indicator closed forms (R=10, s=0.75)
inline constexpr double kAnnulus1d = -0.398606533729391948630968821793;
inline constexpr double kAnnulusSupTangential = -0.0679585759659705500491046444465;
inline constexpr double kAnnulusInfRadial = -0.666666666666666666666666666667;
inline constexpr double kAnnulusGapLB = 0.178801731577151894569659241819;
inline constexpr double kAnnulusBestRayCos = -0.435889894354067355223698198386;
inline constexpr double kAnnulusBestRayValue = -0.0190915503973045287386395463125;

// Self-similar kernel profile F (s=0.75) and Cauchy check (s=0.5)
inline constexpr double kF075_0 = 0.287352751452164445024482162287;
inline constexpr double kF075_0_5 = 0.262296840354090035789597147664;
inline constexpr double kF075_1 = 0.202038159607840130388931544846;
inline constexpr double kF075_2 = 0.0845396231261375200568114750898;
inline constexpr double kF075_5 = 0.00711173604765480684115169149814;
inline constexpr double kF075_10 = 0.0010477760249294404611653640557;
inline constexpr double kF075_prime_05 = -0.094596146982754255544845343844;
inline constexpr double kF05_0 = 0.318309886183790671537767523958;
inline constexpr double kF05_1 = 0.159154943091895335768883764275;
inline constexpr double kF05_3 = 0.0318309886183790671537767521714;

// Convolution of the kernel with exp(-x^2) via Fourier product (s=0.75)
inline constexpr double kConvGauss_x0_t0_5 = 0.595434781578552681438226472667;
inline constexpr double kConvGauss_x1_t0_5 = 0.391319925660717512020713596394;
inline constexpr double kConvGauss_x2_t0_5 = 0.12892004128503558515940924726;
inline constexpr double kConvGauss_x0_t1 = 0.438278549299750602438512768095;

// Radial C^2 cap (r^2 inside the unit ball, quintic blend to 0 at 2)
inline constexpr double kCapHessSup = 14.0943794613854567139076617371;
inline constexpr double kCapRayIntegral = 2.39600755248615681748395506187;

// Compact mollifier bump exp(1 - R0^2/(R0^2-|x|^2)), R0=2: derivative sups
inline constexpr double kMollifierGradSup = 1.08517852902440481412131585738;
inline constexpr double kMollifierHessSup = 5.26645409945321593115117389743;

}  // namespace refvals
