#pragma once

// Frozen output of tests/oracles/transfer_matrix.py (mpmath, 40 digits).

#include <array>

namespace ref {

inline constexpr std::array<double, 31> p_cont_lambda = {0.14703283096679435, 1.4852833462486236, 4.5761410758829369, 9.605943921943097, 16.618429432232989, 25.624672935169584, 36.62820244274054, 49.630380481976646, 64.631814918454272, 81.632808047347973, 100.63352333589451, 121.6340552336245, 144.63446131566165, 169.63477826354327, 196.63503032810854, 225.63523405389748, 256.63540103714289, 289.63553959879594, 324.6356558337411, 361.63575428824799, 400.63583840877858, 441.6359108461951, 484.63597366621858, 529.63602849773545, 576.63607663906295, 625.63611913525312, 676.63615683511192, 729.63619043379294, 784.63622050498874, 841.63624752552353, 900.63627189432936};
inline constexpr std::array<double, 12> p0_lambda = {0.18150547976127508, 1.1639428268490429, 4.2860342816235282, 11.176459630592826, 17.028515793085132, 22.993747623073282, 36.297903177572091, 53.427758829391227, 65.074045035424818, 76.772229654560411, 100.29897412207408, 127.63605473991626};
inline constexpr double p0_omega_2 = 0.88351273958076174;
inline constexpr double p0_green_2 = 0.25912438267230096;
inline constexpr std::array<double, 10> case1_lambda = {-3.190181256668984, -1.0280135840432237, 0.3122762595546571, 1.7447526779997524, 7.4884177598063899, 11.901424436118453, 16.484904148487571, 34.469495089561506, 39.811014009119445, 46.751420213168916};
inline constexpr std::array<double, 10> case2_lambda = {-1.0627815277513, 0.24171068617174174, 0.88771055628258631, 6.1304890193953442, 9.7072368992674639, 14.421876635912969, 27.894278127730617, 36.486911643494107, 43.468103354038994, 65.695161065535043};
inline constexpr std::array<double, 10> case3_lambda = {-3.1899693809651844, -0.79025785108241706, 1.5982076940042268, 4.6941258428178453, 9.6919895572320445, 15.654938675785202, 24.275114569765875, 36.76427043994637, 45.906036917136507, 60.746020783833397};
inline constexpr std::array<double, 10> case4_lambda = {-0.83865400251535741, 0.74514985008819208, 4.3532779074939772, 7.3792647105560249, 12.760484681777747, 23.831715816944323, 28.531248359994802, 41.355488151599743, 60.432465000631468, 66.05422507937428};
inline constexpr std::array<double, 10> cont_q_lambda = {-3.0000557929769767, 0.0, 1.3499152330336937, 3.9814862334124193, 8.8552074894093095, 15.802538307034845, 24.776369723592549, 35.761643391993816, 48.752583382326548, 63.746628866763974};
inline constexpr std::array<double, 6> p0_sweep_0_2 = {0.18380338684795931, 1.1363389252770815, 5.25387844042226, 8.075037857493633, 18.726582939720331, 23.679587673787693};
inline constexpr std::array<double, 6> p0_sweep_0_4 = {0.18219267250181572, 1.0530693668169119, 5.6117924936755357, 8.9372499375680185, 16.219075062137149, 27.562571436403525};
inline constexpr std::array<double, 6> p0_sweep_0_6 = {0.18111867260713097, 1.0756088226965422, 5.1374714455187257, 10.479861066134199, 14.644703582631838, 26.145371640688184};
inline constexpr std::array<double, 6> p0_sweep_0_785 = {0.18150279053868413, 1.1636917521046612, 4.2876625583176937, 11.177240557640568, 17.021982499573138, 22.992276003012258};
inline constexpr std::array<double, 6> p0_sweep_1_0 = {0.18429619365238809, 1.3321301266701939, 3.6780115217891675, 9.6612631899642151, 18.571576356991206, 27.595750426088407};

}  // namespace ref
