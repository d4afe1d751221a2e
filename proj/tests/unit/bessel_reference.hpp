#pragma once

// J_m(x), Y_m(x) from mpmath at 40 digits, rounded to 20.

struct BesselReference {
  int m;
  double x;
  double j;
  double y;
};

inline constexpr BesselReference kBesselReference[] = {
    {0, 0.001, 9.99999750000015625e-1, -4.471416611375923269},
    {0, 0.1, 9.9750156206604003228e-1, -1.5342386513503668441},
    {0, 0.5, 9.3846980724081290423e-1, -4.4451873350670655715e-1},
    {0, 1, 7.6519768655796655145e-1, 8.8256964215676957983e-2},
    {0, 2, 2.2389077914123566805e-1, 5.103756726497451196e-1},
    {0, 5, -1.7759677131433830435e-1, -3.0851762524903378007e-1},
    {0, 7.5, 2.6633965788037839687e-1, 1.1731328614820863084e-1},
    {0, 10, -2.459357644513483352e-1, 5.5671167283599391424e-2},
    {0, 25, 9.6266783275958116174e-2, -1.2724943226800613783e-1},
    {0, 50, 5.5812327669251815005e-2, -9.8064995470077079029e-2},
    {0, 100, 1.9985850304223122424e-2, -7.7244313365083152254e-2},
    {1, 0.001, 4.9999993750000260417e-4, -6.3662216723113942807e+2},
    {1, 0.1, 4.9937526036241997556e-2, -6.4589510947020269877},
    {1, 0.5, 2.4226845767487388638e-1, -1.4714723926702430692},
    {1, 1, 4.4005058574493351596e-1, -7.8121282130028871655e-1},
    {1, 2, 5.767248077568733872e-1, -1.0703243154093754689e-1},
    {1, 5, -3.2757913759146522204e-1, 1.478631433912268448e-1},
    {1, 7.5, 1.3524842757970550518e-1, -2.591285104861162518e-1},
    {1, 10, 4.347274616886143667e-2, 2.4901542420695388392e-1},
    {1, 25, -1.2535024958028990465e-1, -9.8829964783237410053e-2},
    {1, 50, -9.7511828125175137661e-2, -5.6795668562014767942e-2},
    {1, 100, -7.7145352014112158033e-2, -2.0372312002759793305e-2},
    {2, 0.001, 1.2499998958333365885e-7, -1.2732398630456674802e+6},
    {2, 0.1, 1.2489586587999188454e-3, -1.2764478324269017291e+2},
    {2, 0.5, 3.0604023458682641307e-2, -5.4413708371742657196},
    {2, 1, 1.1490348493190048047e-1, -1.6506826068162543911},
    {2, 2, 3.5283402861563771915e-1, -6.1740810419068266648e-1},
    {2, 5, 4.6565116277752215532e-2, 3.6766288260552451799e-1},
    {2, 7.5, -2.3027341052579026215e-1, -1.8641422227783963132e-1},
    {2, 10, 2.5463031368512062253e-1, -5.8680824422086146398e-3},
    {2, 25, -1.0629480324238130855e-1, 1.1934303508534714503e-1},
    {2, 50, -5.9712800794258820511e-2, 9.5793168727596488312e-2},
    {2, 100, -2.1528757344505365585e-2, 7.6836867125027956388e-2},
    {3, 0.001, 2.0833332031250032552e-11, -5.0929588155605026898e+9},
    {3, 0.1, 2.0820315754756261429e-5, -5.0993323786129048894e+3},
    {3, 0.5, 2.5637299945872440754e-3, -4.2059494304723882688e+1},
    {3, 1, 1.9563353982668405919e-2, -5.8215176059647288478},
    {3, 2, 1.289432494744020511e-1, -1.1277837768404277861},
    {3, 5, 3.6483123061366699446e-1, 1.4626716269319276959e-1},
    {3, 7.5, -2.5806091319346031166e-1, 1.597075919379351151e-1},
    {3, 10, 5.8379379305186812343e-2, -2.5136265718383732978e-1},
    {3, 25, 1.0834308106150889528e-1, 1.1792485039689295326e-1},
    {3, 50, 9.2734804061634432021e-2, 6.4459122060222487007e-2},
    {3, 100, 7.6284201720331943409e-2, 2.344578668776091156e-2},
    {5, 0.001, 2.6041665581597241598e-19, -2.4446200786802640918e+17},
    {5, 0.1, 2.603081790964440834e-9, -2.446148450230391535e+7},
    {5, 0.5, 8.053627241357474086e-6, -7.9463014788074733418e+3},
    {5, 1, 2.4975773021123443138e-4, -2.6040586662581222072e+2},
    {5, 2, 7.0396297558716854842e-3, -9.935989128481974981},
    {5, 5, 2.6114054612017009005e-1, -4.5369482249110188076e-1},
    {5, 7.5, 2.8347390516255045867e-1, 1.7541805694546512319e-1},
    {5, 10, -2.3406152818679364044e-1, 1.354030476893623032e-1},
    {5, 25, -6.6007995398422993392e-2, -1.4705799311372266086e-1},
    {5, 50, -8.1400247696569639644e-2, -7.8548413913081653386e-2},
    {5, 100, -7.4195736964513920834e-2, -2.9480196281661895696e-2},
    {10, 0.001, 2.6911443943049987833e-40, -1.1828049377990416564e+38},
    {10, 0.1, 2.6905328954342155795e-20, -1.1831335132045197885e+18},
    {10, 0.5, 2.6131773608228030862e-13, -1.2196362334956963053e+11},
    {10, 1, 2.630615123687453207e-10, -1.2161801427868918929e+8},
    {10, 2, 2.5153862827167367096e-7, -1.2918454220803928264e+5},
    {10, 5, 1.4678026473104741311e-3, -2.5129110095610096737e+1},
    {10, 7.5, 3.8998257889412210093e-2, -1.2769419280524374718},
    {10, 10, 2.074861066333588577e-1, -3.5981415218340272205e-1},
    {10, 25, -7.5179843948523283841e-2, -1.4871839049980649757e-1},
    {10, 50, -1.1384784914946938567e-1, 5.723897182053513546e-3},
    {10, 100, -5.4732176935472014742e-2, 5.8331574236414928754e-2},
    {20, 0.001, 3.9199043029592633038e-85, -4.0601742030076187182e+82},
    {20, 0.1, 3.9194377208586176573e-45, -4.0607084201263722183e+42},
    {20, 0.5, 3.7272019617047144607e-31, -4.2714301215659064361e+28},
    {20, 1, 3.8735030085246577189e-25, -4.1139703148355052801e+22},
    {20, 2, 3.9189728050907538391e-19, -4.0816513889983666253e+16},
    {20, 5, 2.7703300521289416874e-11, -5.9339652969143206921e+8},
    {20, 7.5, 6.2960908284765196051e-8, -2.7276175448916877547e+5},
    {20, 10, 1.1513369247813397783e-5, -1.597483848269625981e+3},
    {20, 25, 5.199404922830323178e-2, 1.9804074776289243611e-1},
    {20, 50, -1.1670435275957973734e-1, 1.644263394811577765e-2},
    {20, 100, 6.2217458498338753141e-2, 5.1247973076188424211e-2},
    {35, 0.001, 2.8165502274136479717e-156, -3.2289742578977897282e+153},
    {35, 0.1, 2.8163546598136263474e-86, -3.2292116677249622272e+83},
    {35, 0.5, 8.1830207795920472945e-62, -1.1115084929709372535e+59},
    {35, 1, 2.797056804555226872e-51, -3.2528068599858725538e+48},
    {35, 2, 9.4123719992917496129e-41, -9.6781822853091612361e+37},
    {35, 5, 6.8879713044121504343e-27, -1.334049815717525362e+24},
    {35, 7.5, 8.0594872852512107531e-21, -1.1552910088984123583e+18},
    {35, 10, 1.3970838454349007281e-16, -6.7931388903423798139e+13},
    {35, 25, 2.2936566020883669089e-4, -5.6775841711753079281e+1},
    {35, 50, 9.3876408647374542778e-2, 9.4851080662770008442e-2},
    {35, 100, 8.1389823515208930973e-2, 1.3098065771246672856e-2},
    {50, 0.001, 2.9202857026040609553e-230, -2.1799914026469163551e+227},
    {50, 0.1, 2.9201425690996356583e-130, -2.1801026184716102597e+127},
    {50, 0.5, 2.5905580660785431235e-95, -2.4575848224461085522e+92},
    {50, 1, 2.9060049481732393945e-80, -2.1911428126053389736e+77},
    {50, 2, 3.2240958394363845645e-65, -1.9761505765184132876e+62},
    {50, 5, 2.2942476159525400713e-45, -2.7888370175838946899e+42},
    {50, 7.5, 1.2543492639479537665e-36, -5.1334030687516076173e+33},
    {50, 10, 1.7845136078715953063e-30, -3.6410665018007402124e+27},
    {50, 25, 9.7561594280229815309e-12, -7.535732514466261627e+8},
    {50, 50, 1.2140902189761506382e-1, -2.1031655464397740833e-1},
    {50, 100, -3.8698339728525383467e-2, 7.6505263944803040444e-2},
    {75, 0.1, 1.066901473961553246e-207, -3.9780014299373461455e+204},
    {75, 0.5, 2.8218360299672842483e-155, -1.504065475338788373e+152},
    {75, 1, 1.0634326016371706734e-132, -3.9913288184352425709e+129},
    {75, 2, 3.9780788446547432263e-110, -1.06725936829042357e+107},
    {75, 5, 2.6010866537898955689e-80, -1.6353151763618450087e+77},
    {75, 7.5, 3.7781372577533929772e-67, -1.12899997935053038e+64},
    {75, 10, 7.6731147423014976449e-58, -5.5810128329657360717e+54},
    {75, 25, 9.2982966493345011431e-29, -4.8413670228904023294e+25},
    {75, 50, 4.5181560997800225104e-9, -1.2605954899668978546e+6},
    {75, 100, 1.4834000156084130336e-2, -9.6954217707488814788e-2},
    {100, 0.1, 8.4525165351217421327e-289, -3.7658612560192481854e+285},
    {100, 0.5, 6.6638999042770851533e-219, -4.7766903780417643734e+215},
    {100, 1, 8.4318287896267085492e-189, -3.7752878101105284001e+185},
    {100, 2, 1.060953112439172484e-158, -3.0008260488574508199e+155},
    {100, 5, 6.2677893955418761175e-119, -5.0848639160202228799e+115},
    {100, 7.5, 2.3583800455568583751e-101, -1.3535096660980840823e+98},
    {100, 10, 6.5973160641553809722e-89, -4.8491482711806071288e+85},
    {100, 25, 1.1064482655301666468e-49, -2.971221643256301784e+46},
    {100, 50, 1.115927369083809278e-21, -3.2938001882026666142e+18},
    {100, 100, 9.6366673295861559674e-2, -1.6692141141757650654e-1},
};
