#pragma once

// Taylor coefficients of 1/Gamma(1.5 + w) about w = 0, split into hi/lo
// double pairs so the series can be summed in double-double arithmetic.
// |c_k * 0.5^k| drops below 1e-38 at k = 36, so 38 coefficients cover the
// base interval [1, 2] to well past double-double precision.
// Regenerate with tools/gen_gamma_taylor.py.

namespace fracwave::detail {

inline constexpr int kGammaTaylorCount = 38;

inline constexpr double kGammaTaylorHi[kGammaTaylorCount] = {
    1.1283791670955126,     -0.0411745264452831,    -0.5266544355255445,
    0.17510202604393457,    0.050966860247706074,   -0.042155169368535604,
    0.006612897826824127,   0.002120731442572938,   -0.0011107302545948906,
    0.00015235762076747688, 2.5355204923814165e-05, -1.3896805717913756e-05,
    2.1562032905141724e-06, 5.7942640540526726e-08, -8.913551118311116e-08,
    1.7103469415915374e-08, -9.313686445241901e-10, -2.6804741033496623e-10,
    7.458932233316326e-11,  -8.012807061414718e-12, -8.382343033451855e-14,
    1.6946340904320522e-13, -2.7875756707125753e-14, 1.8670394695065306e-15,
    1.3049499008587988e-16, -4.8588741441877864e-17, 5.829542692459468e-18,
    -2.592909417993784e-19, -3.326754010285789e-20, 7.944961635768106e-21,
    -7.755543288437357e-22, 2.5533736291329696e-23, 4.274520160147173e-24,
    -8.263381374668449e-25, 7.108187657253398e-26,  -2.0749463887704297e-27,
    -3.2859544069948607e-28, 5.819433908198748e-29,
};

inline constexpr double kGammaTaylorLo[kGammaTaylorCount] = {
    -2.6103841096878456e-17, -1.4502472051157043e-18, 2.0736792027158906e-17,
    -8.504877381474428e-18,  2.7746983494097595e-18,  3.0068145641565335e-18,
    2.7656625603054546e-19,  3.360118527909926e-19,   -1.171194984788616e-19,
    -7.834434581327227e-21,  2.7825281610103663e-22,  -2.1966503957177083e-23,
    5.345561623949452e-23,   -9.577376678046929e-25,  -5.407210233251439e-25,
    -2.5067958831355096e-25, -5.68475712103992e-26,   -2.5650426041281157e-26,
    5.069275148471726e-28,   -3.709184248691236e-28,  6.951006193660979e-31,
    2.6774094974380143e-30,  9.170246852035068e-31,   -5.808808115941088e-32,
    -1.4118220001072642e-32, -1.296173108402983e-33,  -1.6814001575578947e-34,
    1.2952215485740808e-35,  4.012857117795861e-36,   -6.0750311834542364e-37,
    -2.9390253770731675e-38, -2.0819369519846373e-40, 3.794600292072363e-40,
    -5.056879321725143e-41,  -2.6344933495176034e-43, 8.754986893099875e-44,
    2.1698740861381758e-44,  -1.262523052097775e-45,
};

}  // namespace fracwave::detail
