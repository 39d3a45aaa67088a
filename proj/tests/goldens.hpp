// Reference values from a 60-digit mpmath evaluation (tests/oracle/mint_golden.py).
#pragma once
#include <complex>

namespace golden {

inline constexpr double qpoch_inf_03 = 0.56783718684558048999;
inline constexpr double qpoch_03_5 = 0.57075518075699200000;
inline constexpr double qpoch_03_m3 = 1.2397094430992736077;
inline const std::complex<double> qpoch_inf_z{-0.17406223410204670048, 0.013696216816533391855};
inline constexpr double theta_03 = -0.059999680289102028684;
inline const std::complex<double> theta_z{-0.11661151249112818883, -0.0030647298238028539900};
inline constexpr double phi43 = 20.908339884496521239;
inline constexpr double w87 = 1.0005036166488974483;
inline constexpr double phi_13_06 = 3.1250244010751159105;
inline const std::complex<double> phi_g_z{3.8663178228411351592, 1.0744960646002848073};
inline constexpr double phi_g_gbar = 0.68954577534279305288;
inline constexpr double phi_g_dtq_m8 = -14.104333056551210139;
inline constexpr double phi_atq1_dtq_m6 = 3965.0966434963463165;
inline constexpr double poly_2_07 = 1.5379651443502726590;
inline const std::complex<double> poly_3_z{3.9850108920493772201, 2.8109764286944422816};
inline constexpr double Phi_15_m6 = 38.430702794779401160;
inline constexpr double cfun_17 = 3.6214563202611795652;
inline const std::complex<double> cfun_dual_g{-1.8466744837538619159, 0.67741955977125901438};
inline constexpr double Delta_g = 35.923233488888516531;
inline constexpr double W_g = 0.032113376151877904562;
inline constexpr double c0 = 12.268965647432117033;
inline constexpr double K = 9.7471154006192002242;
inline constexpr double M = 0.021756518139706103600;
inline constexpr double c0_dual = 0.21206329302338035479;
inline constexpr double K_dual = 9.7471154006192002242;
inline constexpr double M_dual = 1.2587278536430083165;
inline constexpr double nu_dual_plus_0 = 0.34892167189133594814;
inline constexpr double nu_minus_1 = 0.0031631418615104542953;
inline constexpr double nu_minus_0 = 0.0054827792266181207785;
inline constexpr double nu_minus_m5 = 0.0014214708125863359549;

}  // namespace golden
