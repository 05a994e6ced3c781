#pragma once
// Generated by gen_oracles.py (mpmath, 50 digits).  Do not edit by hand.

namespace oracle {

struct ComplexPoint {
  double s_re, s_im, re, im;
};
struct RealPoint {
  double nu, x, value;
};
struct ComplexKernelPoint {
  double nu, x, re, im;
};
struct GammaFactorPoint {
  int parity;
  double nu, s_re, s_im, re, im;
};

inline constexpr ComplexPoint kGamma[] = {
    {1, 1, 0.498015668118356042713691117462, -0.154949828301810685124955130484},
    {0.5, 3, 0.0214456705524306460595528022516, 0.00686536483726167791423849381986},
    {-2.5, 0.7, -0.159818716362932930154404941645, -0.157566549081515283784737389624},
    {4.2, -10, 0.00159730998599077254855139233938, 0.00128580762703680235803249108522},
    {0.1, 20, -2.49074245883339257756542034141e-16, 1.71741497568172561796135973651e-14},
    {3, 0.5, 1.70242427711889967392441363188, 0.853171603816532210455237699683},
    {-4.7, -19.5, -6.2207465925821272535434302563e-21, 2.2171987273325427486256480648e-20},
    {10.5, 2, -86516.9839115362100541118015495, -925180.380494948304000465617477},
};

// K_{iν}(x)
inline constexpr RealPoint kKImag[] = {
    {0, 1e-3, 7.02368880056238134361208006301},
    {0, 0.1, 2.42706902470201661251850602043},
    {0, 1, 0.421024438240708333335627379213},
    {0, 10, 0.0000177800623161676518113011927995},
    {0, 30, 2.13247749646305637116689606297e-14},
    {1, 1e-3, 0.443354677906757420582252704463},
    {1, 0.1, 0.225381885301567769686224994174},
    {1, 1, 0.289428037025992127634567159242},
    {1, 10, 0.0000169507359484814938035657189636},
    {1, 30, 2.09779046266742008316066456786e-14},
    {5, 1e-3, -0.000361340608582453300756573094804},
    {5, 0.1, -0.0000237141869881223608274882199731},
    {5, 1, 0.000380461827997563728049666415226},
    {5, 10, 0.00000527812176514912199330220504073},
    {5, 30, 1.41402614627268714373116819317e-14},
    {9.5337, 1e-3, -0.0000000947704289796038922204990842323},
    {9.5337, 0.1, -0.000000112945708963507670351671898161},
    {9.5337, 1, 0.000000127801382607398961843625351187},
    {9.5337, 10, 0.000000165310920167322728627996475168},
    {9.5337, 30, 4.74686019674850450191001811108e-15},
};

// K_{1+iν}(x)
inline constexpr ComplexKernelPoint kKOne[] = {
    {0, 1e-3, 999.996238156085574277953404016, 0.0},
    {0, 0.1, 9.85384478087060613484854659668, 0.0},
    {0, 1, 0.601907230197234574737540001536, 0.0},
    {0, 10, 0.0000186487734538255845968168581224, 0.0},
    {0, 30, 2.16773200189154942486703783362e-14, 0.0},
    {1, 1e-3, 274.710127111669124003926904961, 443.354677906757420582252704463},
    {1, 0.1, -4.70463812704392209781499829776, 2.25381885301567769686224994174},
    {1, 1, 0.325459771865841410854646403249, 0.289428037025992127634567159242},
    {1, 10, 0.000017701358059356588452085025495, 0.00000169507359484814938035657189636},
    {1, 30, 2.13134267398116705220427328393e-14, 6.99263487555806694386888189288e-16},
    {5, 1e-3, -1.21254217806096980542796810542, -1.80670304291226650378286547402},
    {5, 0.1, 0.0217243872965719200969917507987, -0.00118570934940611804137441099865},
    {5, 1, 0.00107075098099513758909853131085, 0.00190230913998781864024833207613},
    {5, 10, 0.00000490132807225945856648277949363, 0.00000263906088257456099665110252036},
    {5, 30, 1.41826372148768675926688648745e-14, 2.35671024378781190621861365528e-15},
    {9.5337, 1e-3, -0.00225179094261871116560741424325, -0.000903512838762849627262572119346},
    {9.5337, 0.1, -0.0000217421233047224441340779794061, -0.000010767905055453930768317343755},
    {9.5337, 1, 0.00000209366853496378988615563501076, 0.00000121842004136415948252857101061},
    {9.5337, 10, 0.0000000861128257268443806326624968184, 0.000000157602471959920469792072999531},
    {9.5337, 30, 4.58764545088312988834868122087e-15, 1.50850470192470724566198465552e-15},
};

inline constexpr RealPoint kBracketEven[] = {
    {1, 1e-3, 0.000000179516236886057154141503424451},
    {1, 0.05, -0.000395528370659992134421264523748},
    {1, 30, 0.137192194990804044827277935053},
    {5, 0.3, 0.00000329724958419368262150841493576},
    {9.5337, 1, 0.0000000122239444415281391590104586058},
    {9.5337, 2.5, -0.0000000334684849495483392953707019876},
    {9.5337, 12, -0.000000378998101415422867811956281517},
};

inline constexpr RealPoint kOmega[] = {
    {1, 1e-3, -0.000802387122643382060440262502746},
    {1, 0.05, 0.0221704357882481376001500504374},
    {1, 50, 0.0387652851833660397345315893736},
    {5, 0.3, -0.000109779722927518179632701341839},
    {9.5337, 1, -0.000000149127014237227737203140743448},
    {9.5337, 2.5, 0.000000634416925654939378184439401233},
    {9.5337, 12, 0.000000426126540230404221378591154462},
};

inline constexpr GammaFactorPoint kGammaFactor[] = {
    {0, 9.5337, 2, 0, 0.000000951336559234470869906714254807, 2.03058136980353538933504686496e-58},
    {0, 9.5337, 0.5, 14, 4.41369968089828119474059784598e-10, -1.43743294276979654579895166902e-12},
    {1, 6.5, 2, 5, 0.000121318351950636267169286071559, -0.000000506294474422515796685398176775},
    {1, 3.25, -0.25, 7, 0.0000951128444183757967709143413196, 0.0000466412011251218105370599224831},
    {0, 3.25, 1.5, -30, 8.22259470706260589826480172802e-21, 1.2440389361265610299396815167e-20},
};

}  // namespace oracle
