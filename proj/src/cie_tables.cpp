// Generated by tools/gen_cie_tables.py; do not edit.
// Source: colour-science 0.4.6.
//   CIE 1931 2 deg and CIE 1964 10 deg colour matching functions, CIE 1 nm tables.
//   CIE D65 relative SPD, 5 nm table linearly interpolated to 1 nm.
// Range 360..720 nm, 1 nm step.

#include "cie_tables.hpp"

namespace ovt::data {

const std::array<double, kTableSize> kCie1931X = {
    0.0001299, 0.000145847, 0.0001638021, 0.0001840037, 0.0002066902, 0.0002321,
    0.000260728, 0.000293075, 0.000329388, 0.000369914, 0.0004149, 0.0004641587,
    0.000518986, 0.000581854, 0.0006552347, 0.0007416, 0.0008450296, 0.0009645268,
    0.001094949, 0.001231154, 0.001368, 0.00150205, 0.001642328, 0.001802382,
    0.001995757, 0.002236, 0.002535385, 0.002892603, 0.003300829, 0.003753236,
    0.004243, 0.004762389, 0.005330048, 0.005978712, 0.006741117, 0.00765,
    0.008751373, 0.01002888, 0.0114217, 0.01286901, 0.01431, 0.01570443,
    0.01714744, 0.01878122, 0.02074801, 0.02319, 0.02620736, 0.02978248,
    0.03388092, 0.03846824, 0.04351, 0.0489956, 0.0550226, 0.0617188,
    0.069212, 0.07763, 0.08695811, 0.09717672, 0.1084063, 0.1207672,
    0.13438, 0.1493582, 0.1653957, 0.1819831, 0.198611, 0.21477,
    0.2301868, 0.2448797, 0.2587773, 0.2718079, 0.2839, 0.2949438,
    0.3048965, 0.3137873, 0.3216454, 0.3285, 0.3343513, 0.3392101,
    0.3431213, 0.3461296, 0.34828, 0.3495999, 0.3501474, 0.350013,
    0.349287, 0.34806, 0.3463733, 0.3442624, 0.3418088, 0.3390941,
    0.3362, 0.3331977, 0.3300411, 0.3266357, 0.3228868, 0.3187,
    0.3140251, 0.308884, 0.3032904, 0.2972579, 0.2908, 0.2839701,
    0.2767214, 0.2689178, 0.2604227, 0.2511, 0.2408475, 0.2298512,
    0.2184072, 0.2068115, 0.19536, 0.1842136, 0.1733273, 0.1626881,
    0.1522833, 0.1421, 0.1321786, 0.1225696, 0.1132752, 0.1042979,
    0.09564, 0.08729955, 0.07930804, 0.07171776, 0.06458099, 0.05795001,
    0.05186211, 0.04628152, 0.04115088, 0.03641283, 0.03201, 0.0279172,
    0.0241444, 0.020687, 0.0175404, 0.0147, 0.01216179, 0.00991996,
    0.00796724, 0.006296346, 0.0049, 0.003777173, 0.00294532, 0.00242488,
    0.002236293, 0.0024, 0.00292552, 0.00383656, 0.00517484, 0.00698208,
    0.0093, 0.01214949, 0.01553588, 0.01947752, 0.02399277, 0.0291,
    0.03481485, 0.04112016, 0.04798504, 0.05537861, 0.06327, 0.07163501,
    0.08046224, 0.08973996, 0.09945645, 0.1096, 0.1201674, 0.1311145,
    0.1423679, 0.1538542, 0.1655, 0.1772571, 0.18914, 0.2011694,
    0.2133658, 0.2257499, 0.2383209, 0.2510668, 0.2639922, 0.2771017,
    0.2904, 0.3038912, 0.3175726, 0.3314384, 0.3454828, 0.3597,
    0.3740839, 0.3886396, 0.4033784, 0.4183115, 0.4334499, 0.4487953,
    0.464336, 0.480064, 0.4959713, 0.5120501, 0.5282959, 0.5446916,
    0.5612094, 0.5778215, 0.5945, 0.6112209, 0.6279758, 0.6447602,
    0.6615697, 0.6784, 0.6952392, 0.7120586, 0.7288284, 0.7455188,
    0.7621, 0.7785432, 0.7948256, 0.8109264, 0.8268248, 0.8425,
    0.8579325, 0.8730816, 0.8878944, 0.9023181, 0.9163, 0.9297995,
    0.9427984, 0.9552776, 0.9672179, 0.9786, 0.9893856, 0.9995488,
    1.0090892, 1.0180064, 1.0263, 1.0339827, 1.040986, 1.047188,
    1.0524667, 1.0567, 1.0597944, 1.0617992, 1.0628068, 1.0629096,
    1.0622, 1.0607352, 1.0584436, 1.0552244, 1.0509768, 1.0456,
    1.0390369, 1.0313608, 1.0226662, 1.0130477, 1.0026, 0.9913675,
    0.9793314, 0.9664916, 0.9528479, 0.9384, 0.923194, 0.907244,
    0.890502, 0.87292, 0.8544499, 0.835084, 0.814946, 0.794186,
    0.772954, 0.7514, 0.7295836, 0.7075888, 0.6856022, 0.6638104,
    0.6424, 0.6215149, 0.6011138, 0.5811052, 0.5613977, 0.5419,
    0.5225995, 0.5035464, 0.4847436, 0.4661939, 0.4479, 0.4298613,
    0.412098, 0.394644, 0.3775333, 0.3608, 0.3444563, 0.3285168,
    0.3130192, 0.2980011, 0.2835, 0.2695448, 0.2561184, 0.2431896,
    0.2307272, 0.2187, 0.2070971, 0.1959232, 0.1851708, 0.1748323,
    0.1649, 0.1553667, 0.14623, 0.13749, 0.1291467, 0.1212,
    0.1136397, 0.106465, 0.09969044, 0.09333061, 0.0874, 0.08190096,
    0.07680428, 0.07207712, 0.06768664, 0.0636, 0.05980685, 0.05628216,
    0.05297104, 0.04981861, 0.04677, 0.04378405, 0.04087536, 0.03807264,
    0.03540461, 0.0329, 0.03056419, 0.02838056, 0.02634484, 0.02445275,
    0.0227, 0.02108429, 0.01959988, 0.01823732, 0.01698717, 0.01584,
    0.01479064, 0.01383132, 0.01294868, 0.0121292, 0.01135916, 0.01062935,
    0.009938846, 0.009288422, 0.008678854, 0.008110916, 0.007582388, 0.007088746,
    0.006627313, 0.006195408, 0.005790346, 0.005409826, 0.005052583, 0.004717512,
    0.004403507, 0.004109457, 0.003833913, 0.003575748, 0.003334342, 0.003109075,
    0.002899327,
};

const std::array<double, kTableSize> kCie1931Y = {
    3.917e-06, 4.393581e-06, 4.929604e-06, 5.532136e-06, 6.208245e-06, 6.965e-06,
    7.813219e-06, 8.767336e-06, 9.839844e-06, 1.104323e-05, 1.239e-05, 1.388641e-05,
    1.555728e-05, 1.744296e-05, 1.958375e-05, 2.202e-05, 2.483965e-05, 2.804126e-05,
    3.153104e-05, 3.521521e-05, 3.9e-05, 4.28264e-05, 4.69146e-05, 5.15896e-05,
    5.71764e-05, 6.4e-05, 7.234421e-05, 8.221224e-05, 9.350816e-05, 0.0001061361,
    0.00012, 0.000134984, 0.000151492, 0.000170208, 0.000191816, 0.000217,
    0.0002469067, 0.00028124, 0.00031852, 0.0003572667, 0.000396, 0.0004337147,
    0.000473024, 0.000517876, 0.0005722187, 0.00064, 0.00072456, 0.0008255,
    0.00094116, 0.00106988, 0.00121, 0.001362091, 0.001530752, 0.001720368,
    0.001935323, 0.00218, 0.0024548, 0.002764, 0.0031178, 0.0035264,
    0.004, 0.00454624, 0.00515932, 0.00582928, 0.00654616, 0.0073,
    0.008086507, 0.00890872, 0.00976768, 0.01066443, 0.0116, 0.01257317,
    0.01358272, 0.01462968, 0.01571509, 0.01684, 0.01800736, 0.01921448,
    0.02045392, 0.02171824, 0.023, 0.02429461, 0.02561024, 0.02695857,
    0.02835125, 0.0298, 0.03131083, 0.03288368, 0.03452112, 0.03622571,
    0.038, 0.03984667, 0.041768, 0.043766, 0.04584267, 0.048,
    0.05024368, 0.05257304, 0.05498056, 0.05745872, 0.06, 0.06260197,
    0.06527752, 0.06804208, 0.07091109, 0.0739, 0.077016, 0.0802664,
    0.0836668, 0.0872328, 0.09098, 0.09491755, 0.09904584, 0.1033674,
    0.1078846, 0.1126, 0.117532, 0.1226744, 0.1279928, 0.1334528,
    0.13902, 0.1446764, 0.1504693, 0.1564619, 0.1627177, 0.1693,
    0.1762431, 0.1835581, 0.1912735, 0.199418, 0.20802, 0.2171199,
    0.2267345, 0.2368571, 0.2474812, 0.2586, 0.2701849, 0.2822939,
    0.2950505, 0.308578, 0.323, 0.3384021, 0.3546858, 0.3716986,
    0.3892875, 0.4073, 0.4256299, 0.4443096, 0.4633944, 0.4829395,
    0.503, 0.5235693, 0.544512, 0.56569, 0.5869653, 0.6082,
    0.6293456, 0.6503068, 0.6708752, 0.6908424, 0.71, 0.7281852,
    0.7454636, 0.7619694, 0.7778368, 0.7932, 0.8081104, 0.8224962,
    0.8363068, 0.8494916, 0.862, 0.8738108, 0.8849624, 0.8954936,
    0.9054432, 0.9148501, 0.9237348, 0.9320924, 0.9399226, 0.9472252,
    0.954, 0.9602561, 0.9660074, 0.9712606, 0.9760225, 0.9803,
    0.9840924, 0.9874182, 0.9903128, 0.9928116, 0.9949501, 0.9967108,
    0.9980983, 0.999112, 0.9997482, 1, 0.9998567, 0.9993046,
    0.9983255, 0.9968987, 0.995, 0.9926005, 0.9897426, 0.9864444,
    0.9827241, 0.9786, 0.9740837, 0.9691712, 0.9638568, 0.9581349,
    0.952, 0.9454504, 0.9384992, 0.9311628, 0.9234576, 0.9154,
    0.9070064, 0.8982772, 0.8892048, 0.8797816, 0.87, 0.8598613,
    0.849392, 0.838622, 0.8275813, 0.8163, 0.8047947, 0.793082,
    0.781192, 0.7691547, 0.757, 0.7447541, 0.7324224, 0.7200036,
    0.7074965, 0.6949, 0.6822192, 0.6694716, 0.6566744, 0.6438448,
    0.631, 0.6181555, 0.6053144, 0.5924756, 0.5796379, 0.5668,
    0.5539611, 0.5411372, 0.5283528, 0.5156323, 0.503, 0.4904688,
    0.4780304, 0.4656776, 0.4534032, 0.4412, 0.42908, 0.417036,
    0.405032, 0.393032, 0.381, 0.3689184, 0.3568272, 0.3447768,
    0.3328176, 0.321, 0.3093381, 0.2978504, 0.2865936, 0.2756245,
    0.265, 0.2547632, 0.2448896, 0.2353344, 0.2260528, 0.217,
    0.2081616, 0.1995488, 0.1911552, 0.1829744, 0.175, 0.1672235,
    0.1596464, 0.1522776, 0.1451259, 0.1382, 0.1315003, 0.1250248,
    0.1187792, 0.1127691, 0.107, 0.1014762, 0.09618864, 0.09112296,
    0.08626485, 0.0816, 0.07712064, 0.07282552, 0.06871008, 0.06476976,
    0.061, 0.05739621, 0.05395504, 0.05067376, 0.04754965, 0.04458,
    0.04175872, 0.03908496, 0.03656384, 0.03420048, 0.032, 0.02996261,
    0.02807664, 0.02632936, 0.02470805, 0.0232, 0.02180077, 0.02050112,
    0.01928108, 0.01812069, 0.017, 0.01590379, 0.01483718, 0.01381068,
    0.01283478, 0.01192, 0.01106831, 0.01027339, 0.009533311, 0.008846157,
    0.00821, 0.007623781, 0.007085424, 0.006591476, 0.006138485, 0.005723,
    0.005343059, 0.004995796, 0.004676404, 0.004380075, 0.004102, 0.003838453,
    0.003589099, 0.003354219, 0.003134093, 0.002929, 0.002738139, 0.002559876,
    0.002393244, 0.002237275, 0.002091, 0.001953587, 0.00182458, 0.00170358,
    0.001590187, 0.001484, 0.001384496, 0.001291268, 0.001204092, 0.001122744,
    0.001047,
};

const std::array<double, kTableSize> kCie1931Z = {
    0.0006061, 0.0006808792, 0.0007651456, 0.0008600124, 0.0009665928, 0.001086,
    0.001220586, 0.001372729, 0.001543579, 0.001734286, 0.001946, 0.002177777,
    0.002435809, 0.002731953, 0.003078064, 0.003486, 0.003975227, 0.00454088,
    0.00515832, 0.005802907, 0.006450001, 0.007083216, 0.007745488, 0.008501152,
    0.009414544, 0.01054999, 0.0119658, 0.01365587, 0.01558805, 0.01773015,
    0.02005001, 0.02251136, 0.02520288, 0.02827972, 0.03189704, 0.03621,
    0.04143771, 0.04750372, 0.05411988, 0.06099803, 0.06785001, 0.07448632,
    0.08136156, 0.08915364, 0.09854048, 0.1102, 0.1246133, 0.1417017,
    0.1613035, 0.1832568, 0.2074, 0.2336921, 0.2626114, 0.2947746,
    0.3307985, 0.3713, 0.4162091, 0.4654642, 0.5196948, 0.5795303,
    0.6456, 0.7184838, 0.7967133, 0.8778459, 0.959439, 1.0390501,
    1.1153673, 1.1884971, 1.2581233, 1.3239296, 1.3856, 1.4426352,
    1.4948035, 1.5421903, 1.5848807, 1.62296, 1.6564048, 1.6852959,
    1.7098745, 1.7303821, 1.74706, 1.7600446, 1.7696233, 1.7762637,
    1.7804334, 1.7826, 1.7829682, 1.7816998, 1.7791982, 1.7758671,
    1.77211, 1.7682589, 1.764039, 1.7589438, 1.7524663, 1.7441,
    1.7335595, 1.7208581, 1.7059369, 1.6887372, 1.6692, 1.6475287,
    1.6234127, 1.5960223, 1.564528, 1.5281, 1.4861114, 1.4395215,
    1.3898799, 1.3387362, 1.28764, 1.2374223, 1.1878243, 1.1387611,
    1.090148, 1.0419, 0.9941976, 0.9473473, 0.9014531, 0.8566193,
    0.8129501, 0.7705173, 0.7294448, 0.6899136, 0.6521049, 0.6162,
    0.5823286, 0.5504162, 0.5203376, 0.4919673, 0.46518, 0.4399246,
    0.4161836, 0.3938822, 0.3729459, 0.3533, 0.3348578, 0.3175521,
    0.3013375, 0.2861686, 0.272, 0.2588171, 0.2464838, 0.2347718,
    0.2234533, 0.2123, 0.2011692, 0.1901196, 0.1792254, 0.1685608,
    0.1582, 0.1481383, 0.1383758, 0.1289942, 0.1200751, 0.1117,
    0.1039048, 0.09666748, 0.08998272, 0.08384531, 0.07824999, 0.07320899,
    0.06867816, 0.06456784, 0.06078835, 0.05725001, 0.05390435, 0.05074664,
    0.04775276, 0.04489859, 0.04216, 0.03950728, 0.03693564, 0.03445836,
    0.03208872, 0.02984, 0.02771181, 0.02569444, 0.02378716, 0.02198925,
    0.0203, 0.01871805, 0.01724036, 0.01586364, 0.01458461, 0.0134,
    0.01230723, 0.01130188, 0.01037792, 0.009529306, 0.008749999, 0.0080352,
    0.0073816, 0.0067854, 0.0062428, 0.005749999, 0.0053036, 0.0048998,
    0.0045342, 0.0042024, 0.0039, 0.0036232, 0.0033706, 0.0031414,
    0.0029348, 0.002749999, 0.0025852, 0.0024386, 0.0023094, 0.0021968,
    0.0021, 0.002017733, 0.0019482, 0.0018898, 0.001840933, 0.0018,
    0.001766267, 0.0017378, 0.0017112, 0.001683067, 0.001650001, 0.001610133,
    0.0015644, 0.0015136, 0.001458533, 0.0014, 0.001336667, 0.00127,
    0.001205, 0.001146667, 0.0011, 0.0010688, 0.0010494, 0.0010356,
    0.0010212, 0.001, 0.00096864, 0.00092992, 0.00088688, 0.00084256,
    0.0008, 0.00076096, 0.00072368, 0.00068592, 0.00064544, 0.0006,
    0.0005478667, 0.0004916, 0.0004354, 0.0003834667, 0.00034, 0.0003072533,
    0.00028316, 0.00026544, 0.0002518133, 0.00024, 0.0002295467, 0.00022064,
    0.00021196, 0.0002021867, 0.00019, 0.0001742133, 0.00015564, 0.00013596,
    0.0001168533, 0.0001, 8.613333e-05, 7.46e-05, 6.5e-05, 5.693333e-05,
    4.999999e-05, 4.416e-05, 3.948e-05, 3.572e-05, 3.264e-05, 3e-05,
    2.765333e-05, 2.556e-05, 2.364e-05, 2.181333e-05, 2e-05, 1.813333e-05,
    1.62e-05, 1.42e-05, 1.213333e-05, 1e-05, 7.733333e-06, 5.4e-06,
    3.2e-06, 1.333333e-06, 0, 0, 0, 0,
    0, 0, 0, 0, 0, 0,
    0, 0, 0, 0, 0, 0,
    0, 0, 0, 0, 0, 0,
    0, 0, 0, 0, 0, 0,
    0, 0, 0, 0, 0, 0,
    0, 0, 0, 0, 0, 0,
    0, 0, 0, 0, 0, 0,
    0, 0, 0, 0, 0, 0,
    0, 0, 0, 0, 0, 0,
    0, 0, 0, 0, 0, 0,
    0, 0, 0, 0, 0, 0,
    0,
};

const std::array<double, kTableSize> kCie1964X = {
    1.222e-07, 1.85138e-07, 2.7883e-07, 4.1747e-07, 6.2133e-07, 9.1927e-07,
    1.35198e-06, 1.97654e-06, 2.8725e-06, 4.1495e-06, 5.9586e-06, 8.5056e-06,
    1.20686e-05, 1.70226e-05, 2.3868e-05, 3.3266e-05, 4.6087e-05, 6.3472e-05,
    8.6892e-05, 0.000118246, 0.000159952, 0.00021508, 0.00028749, 0.00038199,
    0.00050455, 0.00066244, 0.0008645, 0.0011215, 0.00144616, 0.00185359,
    0.0023616, 0.0029906, 0.0037645, 0.0047102, 0.0058581, 0.0072423,
    0.0088996, 0.0108709, 0.0131989, 0.0159292, 0.0191097, 0.022788,
    0.027011, 0.031829, 0.037278, 0.0434, 0.050223, 0.057764,
    0.066038, 0.075033, 0.084736, 0.095041, 0.105836, 0.117066,
    0.128682, 0.140638, 0.152893, 0.165416, 0.178191, 0.191214,
    0.204492, 0.21765, 0.230267, 0.242311, 0.253793, 0.264737,
    0.275195, 0.285301, 0.295143, 0.304869, 0.314679, 0.324355,
    0.33357, 0.342243, 0.350312, 0.357719, 0.364482, 0.370493,
    0.375727, 0.380158, 0.383734, 0.386327, 0.387858, 0.388396,
    0.387978, 0.386726, 0.384696, 0.382006, 0.378709, 0.374915,
    0.370702, 0.366089, 0.361045, 0.355518, 0.349486, 0.342957,
    0.335893, 0.328284, 0.32015, 0.311475, 0.302273, 0.292858,
    0.283502, 0.274044, 0.264263, 0.254085, 0.243392, 0.232187,
    0.220488, 0.208198, 0.195618, 0.183034, 0.170222, 0.157348,
    0.14465, 0.132349, 0.120584, 0.109456, 0.099042, 0.089388,
    0.080507, 0.072034, 0.06371, 0.055694, 0.048117, 0.041072,
    0.034642, 0.028896, 0.023876, 0.019628, 0.016172, 0.0133,
    0.010759, 0.008542, 0.006661, 0.005132, 0.003982, 0.003239,
    0.002934, 0.003114, 0.003816, 0.005095, 0.006936, 0.009299,
    0.012147, 0.015444, 0.019156, 0.02325, 0.02769, 0.032444,
    0.037465, 0.042956, 0.049114, 0.05592, 0.063349, 0.071358,
    0.079901, 0.088909, 0.098293, 0.107949, 0.117749, 0.127839,
    0.13845, 0.149516, 0.161041, 0.172953, 0.185209, 0.197755,
    0.210538, 0.22346, 0.236491, 0.249633, 0.262972, 0.276515,
    0.290269, 0.304213, 0.318361, 0.332705, 0.347232, 0.361926,
    0.376772, 0.391683, 0.406594, 0.421539, 0.436517, 0.451584,
    0.466782, 0.482147, 0.497738, 0.513606, 0.529826, 0.54644,
    0.563426, 0.580726, 0.59829, 0.616053, 0.633948, 0.651901,
    0.669824, 0.687632, 0.705224, 0.722773, 0.740483, 0.758273,
    0.776083, 0.793832, 0.811436, 0.828822, 0.845879, 0.862525,
    0.878655, 0.894208, 0.909206, 0.923672, 0.937638, 0.951162,
    0.964283, 0.977068, 0.98959, 1.00191, 1.01416, 1.0265,
    1.0388, 1.051, 1.0629, 1.0743, 1.0852, 1.0952,
    1.1042, 1.112, 1.11852, 1.1238, 1.128, 1.1311,
    1.1332, 1.1343, 1.1343, 1.1333, 1.1312, 1.1281,
    1.12399, 1.1189, 1.1129, 1.1059, 1.098, 1.0891,
    1.0792, 1.0684, 1.0567, 1.044, 1.03048, 1.016,
    1.0008, 0.98479, 0.96808, 0.95074, 0.9328, 0.91434,
    0.89539, 0.87603, 0.856297, 0.83635, 0.81629, 0.79605,
    0.77561, 0.75493, 0.73399, 0.71278, 0.69129, 0.66952,
    0.647467, 0.62511, 0.60252, 0.57989, 0.55737, 0.53511,
    0.51324, 0.49186, 0.47108, 0.45096, 0.431567, 0.41287,
    0.39475, 0.37721, 0.36019, 0.34369, 0.32769, 0.31217,
    0.29711, 0.2825, 0.268329, 0.25459, 0.2413, 0.22848,
    0.21614, 0.2043, 0.19295, 0.18211, 0.17177, 0.16192,
    0.152568, 0.14367, 0.1352, 0.12713, 0.11948, 0.11221,
    0.10531, 0.098786, 0.09261, 0.086773, 0.0812606, 0.076048,
    0.071114, 0.066454, 0.062062, 0.05793, 0.05405, 0.050412,
    0.047006, 0.043823, 0.0408508, 0.038072, 0.035468, 0.033031,
    0.030753, 0.028623, 0.026635, 0.024781, 0.023052, 0.021441,
    0.0199413, 0.018544, 0.017241, 0.016027, 0.014896, 0.013842,
    0.012862, 0.011949, 0.0111, 0.010311, 0.00957688, 0.008894,
    0.0082581, 0.0076664, 0.0071163, 0.0066052, 0.0061306, 0.0056903,
    0.0052819, 0.0049033, 0.00455263, 0.0042275, 0.0039258, 0.0036457,
    0.0033859, 0.0031447, 0.0029208, 0.002713, 0.0025202, 0.0023411,
    0.00217496,
};

const std::array<double, kTableSize> kCie1964Y = {
    1.3398e-08, 2.0294e-08, 3.056e-08, 4.574e-08, 6.805e-08, 1.0065e-07,
    1.4798e-07, 2.1627e-07, 3.142e-07, 4.537e-07, 6.511e-07, 9.288e-07,
    1.3175e-06, 1.8572e-06, 2.602e-06, 3.625e-06, 5.019e-06, 6.907e-06,
    9.449e-06, 1.2848e-05, 1.7364e-05, 2.3327e-05, 3.115e-05, 4.135e-05,
    5.456e-05, 7.156e-05, 9.33e-05, 0.00012087, 0.00015564, 0.0001992,
    0.0002534, 0.0003202, 0.0004024, 0.0005023, 0.0006232, 0.0007685,
    0.0009417, 0.0011478, 0.0013903, 0.001674, 0.0020044, 0.002386,
    0.002822, 0.003319, 0.00388, 0.004509, 0.005209, 0.005985,
    0.006833, 0.007757, 0.008756, 0.009816, 0.010918, 0.012058,
    0.013237, 0.014456, 0.015717, 0.017025, 0.018399, 0.019848,
    0.021391, 0.022992, 0.024598, 0.026213, 0.027841, 0.029497,
    0.031195, 0.032927, 0.034738, 0.036654, 0.038676, 0.040792,
    0.042946, 0.045114, 0.047333, 0.049602, 0.051934, 0.054337,
    0.056822, 0.059399, 0.062077, 0.064737, 0.067285, 0.069764,
    0.072218, 0.074704, 0.077272, 0.079979, 0.082874, 0.086,
    0.089456, 0.092947, 0.096275, 0.099535, 0.102829, 0.106256,
    0.109901, 0.113835, 0.118167, 0.122932, 0.128201, 0.133457,
    0.138323, 0.143042, 0.147787, 0.152761, 0.158102, 0.163941,
    0.170362, 0.177425, 0.18519, 0.193025, 0.200313, 0.207156,
    0.213644, 0.21994, 0.22617, 0.232467, 0.239025, 0.245997,
    0.253589, 0.261876, 0.270643, 0.279645, 0.288694, 0.297665,
    0.306469, 0.315035, 0.323335, 0.331366, 0.339133, 0.34786,
    0.358326, 0.370001, 0.382464, 0.395379, 0.408482, 0.421588,
    0.434619, 0.447601, 0.460777, 0.47434, 0.4882, 0.50234,
    0.51674, 0.53136, 0.54619, 0.56118, 0.57629, 0.5915,
    0.606741, 0.62215, 0.63783, 0.65371, 0.66968, 0.68566,
    0.70155, 0.71723, 0.73257, 0.74746, 0.761757, 0.77534,
    0.78822, 0.80046, 0.81214, 0.82333, 0.83412, 0.8446,
    0.85487, 0.86504, 0.875211, 0.88537, 0.89537, 0.90515,
    0.91465, 0.92381, 0.93255, 0.94081, 0.94852, 0.9556,
    0.961988, 0.96754, 0.97223, 0.97617, 0.97946, 0.9822,
    0.98452, 0.98652, 0.98832, 0.99002, 0.991761, 0.99353,
    0.99523, 0.99677, 0.99809, 0.99911, 0.99977, 1,
    0.99971, 0.99885, 0.99734, 0.99526, 0.99274, 0.98975,
    0.9863, 0.98238, 0.97798, 0.97311, 0.96774, 0.96189,
    0.955552, 0.948601, 0.940981, 0.932798, 0.924158, 0.915175,
    0.905954, 0.896608, 0.887249, 0.877986, 0.868934, 0.860164,
    0.851519, 0.842963, 0.834393, 0.825623, 0.816764, 0.807544,
    0.797947, 0.787893, 0.777405, 0.76649, 0.755309, 0.743845,
    0.73219, 0.720353, 0.708281, 0.696055, 0.683621, 0.671048,
    0.658341, 0.645545, 0.632718, 0.619815, 0.606887, 0.593878,
    0.580781, 0.567653, 0.55449, 0.541228, 0.527963, 0.514634,
    0.501363, 0.488124, 0.474935, 0.461834, 0.448823, 0.435917,
    0.423153, 0.410526, 0.398057, 0.385835, 0.373951, 0.362311,
    0.350863, 0.339554, 0.328309, 0.317118, 0.305936, 0.294737,
    0.283493, 0.272222, 0.26099, 0.249877, 0.238946, 0.228254,
    0.217853, 0.20778, 0.198072, 0.188748, 0.179828, 0.171285,
    0.163059, 0.155151, 0.147535, 0.140211, 0.13317, 0.1264,
    0.119892, 0.11364, 0.107633, 0.10187, 0.096347, 0.091063,
    0.08601, 0.081187, 0.076583, 0.072198, 0.068024, 0.064052,
    0.060281, 0.056697, 0.053292, 0.050059, 0.046998, 0.044096,
    0.041345, 0.0387507, 0.0362978, 0.0339832, 0.0318004, 0.0297395,
    0.0277918, 0.0259551, 0.0242263, 0.0226017, 0.0210779, 0.0196505,
    0.0183153, 0.0170686, 0.0159051, 0.0148183, 0.0138008, 0.0128495,
    0.0119607, 0.0111303, 0.0103555, 0.0096332, 0.0089599, 0.0083324,
    0.0077488, 0.0072046, 0.0066975, 0.0062251, 0.005785, 0.0053751,
    0.0049941, 0.0046392, 0.0043093, 0.0040028, 0.00371774, 0.00345262,
    0.00320583, 0.00297623, 0.00276281, 0.00256456, 0.00238048, 0.00220971,
    0.00205132, 0.00190449, 0.00176847, 0.00164236, 0.00152535, 0.00141672,
    0.00131595, 0.00122239, 0.00113555, 0.00105494, 0.00098014, 0.00091066,
    0.00084619,
};

const std::array<double, kTableSize> kCie1964Z = {
    5.35027e-07, 8.1072e-07, 1.2212e-06, 1.8287e-06, 2.7222e-06, 4.0283e-06,
    5.9257e-06, 8.6651e-06, 1.2596e-05, 1.8201e-05, 2.61437e-05, 3.733e-05,
    5.2987e-05, 7.4764e-05, 0.00010487, 0.00014622, 0.00020266, 0.00027923,
    0.00038245, 0.00052072, 0.000704776, 0.00094823, 0.0012682, 0.0016861,
    0.0022285, 0.0029278, 0.0038237, 0.0049642, 0.0064067, 0.0082193,
    0.0104822, 0.013289, 0.016747, 0.02098, 0.026127, 0.032344,
    0.039802, 0.048691, 0.05921, 0.071576, 0.0860109, 0.10274,
    0.122, 0.14402, 0.16899, 0.19712, 0.22857, 0.26347,
    0.3019, 0.34387, 0.389366, 0.43797, 0.48922, 0.5429,
    0.59881, 0.65676, 0.71658, 0.77812, 0.84131, 0.90611,
    0.972542, 1.0389, 1.1031, 1.1651, 1.2249, 1.2825,
    1.3382, 1.3926, 1.4461, 1.4994, 1.55348, 1.6072,
    1.6589, 1.7082, 1.7548, 1.7985, 1.8392, 1.8766,
    1.9105, 1.9408, 1.96728, 1.9891, 2.0057, 2.0174,
    2.0244, 2.0273, 2.0264, 2.0223, 2.0153, 2.006,
    1.9948, 1.9814, 1.9653, 1.9464, 1.9248, 1.9007,
    1.8741, 1.8451, 1.8139, 1.7806, 1.74537, 1.7091,
    1.6723, 1.6347, 1.5956, 1.5549, 1.5122, 1.4673,
    1.4199, 1.37, 1.31756, 1.2624, 1.205, 1.1466,
    1.088, 1.0302, 0.97383, 0.91943, 0.86746, 0.81828,
    0.772125, 0.72829, 0.68604, 0.64553, 0.60685, 0.57006,
    0.53522, 0.50234, 0.4714, 0.44239, 0.415254, 0.390024,
    0.366399, 0.344015, 0.322689, 0.302356, 0.283036, 0.264816,
    0.247848, 0.232318, 0.218502, 0.205851, 0.193596, 0.181736,
    0.170281, 0.159249, 0.148673, 0.138609, 0.129096, 0.120215,
    0.112044, 0.10471, 0.098196, 0.092361, 0.087088, 0.082248,
    0.077744, 0.073456, 0.069268, 0.06506, 0.060709, 0.056457,
    0.052609, 0.049122, 0.045954, 0.04305, 0.040368, 0.037839,
    0.035384, 0.032949, 0.030451, 0.028029, 0.025862, 0.02392,
    0.022174, 0.020584, 0.019127, 0.01774, 0.016403, 0.015064,
    0.013676, 0.012308, 0.011056, 0.009915, 0.008872, 0.007918,
    0.00703, 0.006223, 0.005453, 0.004714, 0.003988, 0.003289,
    0.002646, 0.002063, 0.001533, 0.001091, 0.000711, 0.000407,
    0.000184, 4.7e-05, 0, 0, 0, 0,
    0, 0, 0, 0, 0, 0,
    0, 0, 0, 0, 0, 0,
    0, 0, 0, 0, 0, 0,
    0, 0, 0, 0, 0, 0,
    0, 0, 0, 0, 0, 0,
    0, 0, 0, 0, 0, 0,
    0, 0, 0, 0, 0, 0,
    0, 0, 0, 0, 0, 0,
    0, 0, 0, 0, 0, 0,
    0, 0, 0, 0, 0, 0,
    0, 0, 0, 0, 0, 0,
    0, 0, 0, 0, 0, 0,
    0, 0, 0, 0, 0, 0,
    0, 0, 0, 0, 0, 0,
    0, 0, 0, 0, 0, 0,
    0, 0, 0, 0, 0, 0,
    0, 0, 0, 0, 0, 0,
    0, 0, 0, 0, 0, 0,
    0, 0, 0, 0, 0, 0,
    0, 0, 0, 0, 0, 0,
    0, 0, 0, 0, 0, 0,
    0, 0, 0, 0, 0, 0,
    0, 0, 0, 0, 0, 0,
    0, 0, 0, 0, 0, 0,
    0, 0, 0, 0, 0, 0,
    0, 0, 0, 0, 0, 0,
    0,
};

const std::array<double, kTableSize> kD65 = {
    46.6383, 47.18338, 47.72846, 48.27354, 48.81862, 49.3637,
    49.90878, 50.45386, 50.99894, 51.54402, 52.0891, 51.87774,
    51.66638, 51.45502, 51.24366, 51.0323, 50.82094, 50.60958,
    50.39822, 50.18686, 49.9755, 50.44276, 50.91002, 51.37728,
    51.84454, 52.3118, 52.77908, 53.24636, 53.71364, 54.18092,
    54.6482, 57.45886, 60.26952, 63.08018, 65.89084, 68.7015,
    71.51218, 74.32286, 77.13354, 79.94422, 82.7549, 83.628,
    84.5011, 85.3742, 86.2473, 87.1204, 87.99352, 88.86664,
    89.73976, 90.61288, 91.486, 91.68058, 91.87516, 92.06974,
    92.26432, 92.4589, 92.65348, 92.84806, 93.04264, 93.23722,
    93.4318, 92.75684, 92.08188, 91.40692, 90.73196, 90.057,
    89.38206, 88.70712, 88.03218, 87.35724, 86.6823, 88.50056,
    90.31882, 92.13708, 93.95534, 95.7736, 97.59188, 99.41016,
    101.22844, 103.04672, 104.865, 106.0792, 107.2934, 108.5076,
    109.7218, 110.936, 112.1504, 113.3648, 114.5792, 115.7936,
    117.008, 117.0884, 117.1688, 117.2492, 117.3296, 117.41,
    117.4904, 117.5708, 117.6512, 117.7316, 117.812, 117.5168,
    117.2216, 116.9264, 116.6312, 116.336, 116.041, 115.746,
    115.451, 115.156, 114.861, 114.9672, 115.0734, 115.1796,
    115.2858, 115.392, 115.4982, 115.6044, 115.7106, 115.8168,
    115.923, 115.2118, 114.5006, 113.7894, 113.0782, 112.367,
    111.6558, 110.9446, 110.2334, 109.5222, 108.811, 108.8652,
    108.9194, 108.9736, 109.0278, 109.082, 109.1364, 109.1908,
    109.2452, 109.2996, 109.354, 109.1988, 109.0436, 108.8884,
    108.7332, 108.578, 108.4228, 108.2676, 108.1124, 107.9572,
    107.802, 107.5008, 107.1996, 106.8984, 106.5972, 106.296,
    105.9948, 105.6936, 105.3924, 105.0912, 104.79, 105.0798,
    105.3696, 105.6594, 105.9492, 106.239, 106.529, 106.819,
    107.109, 107.399, 107.689, 107.3606, 107.0322, 106.7038,
    106.3754, 106.047, 105.7186, 105.3902, 105.0618, 104.7334,
    104.405, 104.369, 104.333, 104.297, 104.261, 104.225,
    104.1892, 104.1534, 104.1176, 104.0818, 104.046, 103.6414,
    103.2368, 102.8322, 102.4276, 102.023, 101.6184, 101.2138,
    100.8092, 100.4046, 100, 99.63342, 99.26684, 98.90026,
    98.53368, 98.1671, 97.80052, 97.43394, 97.06736, 96.70078,
    96.3342, 96.27958, 96.22496, 96.17034, 96.11572, 96.0611,
    96.00648, 95.95186, 95.89724, 95.84262, 95.788, 95.07776,
    94.36752, 93.65728, 92.94704, 92.2368, 91.52656, 90.81632,
    90.10608, 89.39584, 88.6856, 88.81766, 88.94972, 89.08178,
    89.21384, 89.3459, 89.47796, 89.61002, 89.74208, 89.87414,
    90.0062, 89.96548, 89.92476, 89.88404, 89.84332, 89.8026,
    89.7619, 89.7212, 89.6805, 89.6398, 89.5991, 89.40906,
    89.21902, 89.02898, 88.83894, 88.6489, 88.45886, 88.26882,
    88.07878, 87.88874, 87.6987, 87.25768, 86.81666, 86.37564,
    85.93462, 85.4936, 85.0526, 84.6116, 84.1706, 83.7296,
    83.2886, 83.32966, 83.37072, 83.41178, 83.45284, 83.4939,
    83.53496, 83.57602, 83.61708, 83.65814, 83.6992, 83.33196,
    82.96472, 82.59748, 82.23024, 81.863, 81.49576, 81.12852,
    80.76128, 80.39404, 80.0268, 80.04558, 80.06436, 80.08314,
    80.10192, 80.1207, 80.13948, 80.15826, 80.17704, 80.19582,
    80.2146, 80.42092, 80.62724, 80.83356, 81.03988, 81.2462,
    81.45252, 81.65884, 81.86516, 82.07148, 82.2778, 81.87844,
    81.47908, 81.07972, 80.68036, 80.281, 79.88164, 79.48228,
    79.08292, 78.68356, 78.2842, 77.4279, 76.5716, 75.7153,
    74.859, 74.0027, 73.14642, 72.29014, 71.43386, 70.57758,
    69.7213, 69.91008, 70.09886, 70.28764, 70.47642, 70.6652,
    70.85398, 71.04276, 71.23154, 71.42032, 71.6091, 71.88308,
    72.15706, 72.43104, 72.70502, 72.979, 73.253, 73.527,
    73.801, 74.075, 74.349, 73.0745, 71.8, 70.5255,
    69.251, 67.9765, 66.702, 65.4275, 64.153, 62.8785,
    61.604,
};

}  // namespace ovt::data
