#pragma once
// Generated by tests/oracles/generate.py. Do not edit.
namespace oracle {
struct Bracket { double value, half_width; };
inline constexpr Bracket t_squared{0.29092647840367575, 2.9802322387695312e-08};
inline constexpr Bracket sqrt_t{0.6908630048946371, 2.9802322387695312e-08};
inline constexpr Bracket d_1{-0.36987418059136246, 1.8725351414619643e-07};
inline constexpr Bracket d_2{-0.23110607405549138, 3.7450702829239286e-07};
inline constexpr Bracket d_3{0.09276674324961402, 5.617605424385893e-07};
inline constexpr Bracket d_64{0.028605058617857785, 1.1984224905356572e-05};
inline constexpr Bracket c_1{-0.15098885551566124, 2.1705583653389174e-07};
inline constexpr Bracket c_2{0.018533250743768246, 4.043093506800882e-07};
inline constexpr Bracket f_10_cos{-0.027847199351749518, 2.980232238769531e-07};
inline constexpr Bracket f_10_sin{0.09413787529052993, 2.980232238769531e-07};
inline constexpr double gamma_0_3 = 2.991568987687591;
inline constexpr double gamma_0_5 = 1.772453850905516;
inline constexpr double gamma_1_7 = 0.9086387328532904;
inline constexpr double gamma_2_5 = 1.329340388179137;
inline constexpr double gamma_7_25 = 1155.3810139199898;
struct Point { double x, y; };
inline constexpr Point j0[] = {{0.5, 0.9384698072408129}, {2, 0.22389077914123567}, {5, -0.1775967713143383}, {12, 0.047689310796833535}, {19.5, 0.17885382704017289}, {20.5, 0.11509696025367476}, {30, -0.08636798358104021}, {100, 0.019985850304223122}, {1000, 0.024786686152420176}};
inline constexpr double j0_first_zero = 2.404825557695773;
struct Fresnel { double T, cos_part, sin_part; };
inline constexpr Fresnel fresnel[] = {{1, 0.904524237900272, 0.3102683017233811}, {5, 0.6114667663964626, 0.5279172811653224}, {10, 0.6011251848134443, 0.5836708999296233}};
inline constexpr Point hyp2f3_decay_set[] = {{-1, 0.43809351366162025}, {-10, 0.13559986739032825}, {-1000, 0.03545998935836}};
struct Oscillatory { double a, b, mu; bool outer_sin, kernel_sin; double value; };
inline constexpr Oscillatory oscillatory[] = {
    {0.15915494309189535, 0.5, 0.25, true, true, 0.8194608186089684},
    {0.15915494309189535, 0.5, 0.25, true, false, 0.7673644200253081},
    {0.15915494309189535, 0.5, 0.25, false, true, 0.4624986177235184},
    {0.15915494309189535, 0.5, 0.25, false, false, 4.671523882760081},
    {0.15915494309189535, 0.5, 0.5, true, true, 1.003114822131429},
    {0.15915494309189535, 0.5, 0.5, true, false, 0.670259895528438},
    {0.15915494309189535, 0.5, 0.5, false, true, 0.552751604681213},
    {0.15915494309189535, 0.5, 0.5, false, false, 2.7788699715497973},
    {0.15915494309189535, 0.5, 1.5, true, true, 2.2397681166071024},
    {0.15915494309189535, 0.5, 1.5, true, false, -0.14632122037068504},
    {0.15915494309189535, 0.5, 1.5, false, true, 1.4177185270469692},
    {0.15915494309189535, 0.5, 1.5, false, false, 2.0868769672192116},
    {0.15915494309189535, 1.0, 0.25, true, true, 0.6551932416503343},
    {0.15915494309189535, 1.0, 0.25, true, false, 1.8900626268851555},
    {0.15915494309189535, 1.0, 0.25, false, true, -0.6509614530112138},
    {0.15915494309189535, 1.0, 0.25, false, false, 4.006960146273556},
    {0.15915494309189535, 1.0, 0.5, true, true, 0.8195991098152896},
    {0.15915494309189535, 1.0, 0.5, true, false, 1.9786872866249878},
    {0.15915494309189535, 1.0, 0.5, false, true, -0.8822671174723885},
    {0.15915494309189535, 1.0, 0.5, false, false, 2.129981240637657},
    {0.15915494309189535, 1.0, 1.5, true, true, 2.5198230864290156},
    {0.15915494309189535, 1.0, 1.5, true, false, 3.3798662425886734},
    {0.15915494309189535, 1.0, 1.5, false, true, -2.7169765562358643},
    {0.15915494309189535, 1.0, 1.5, false, false, 2.231714334982662},
    {0.15915494309189535, 2.0, 0.25, true, true, 0.3586647083753225},
    {0.15915494309189535, 2.0, 0.25, true, false, 0.7532172951615669},
    {0.15915494309189535, 2.0, 0.25, false, true, 0.3778071359446758},
    {0.15915494309189535, 2.0, 0.25, false, false, 3.184752209235096},
    {0.15915494309189535, 2.0, 0.5, true, true, 0.5806986700015636},
    {0.15915494309189535, 2.0, 0.5, true, false, 0.24053326476666598},
    {0.15915494309189535, 2.0, 0.5, false, true, 0.6163824942909047},
    {0.15915494309189535, 2.0, 0.5, false, false, 1.488078977326459},
    {0.15915494309189535, 2.0, 1.5, true, true, 3.949268275966516},
    {0.15915494309189535, 2.0, 1.5, true, false, -3.688344364703577},
    {0.15915494309189535, 2.0, 1.5, false, true, 3.9310371055471056},
    {0.15915494309189535, 2.0, 1.5, false, false, 3.7656111594921855},
    {0.5, 0.5, 0.25, true, true, 0.44291546093776957},
    {0.5, 0.5, 0.25, true, false, 0.33054783625476997},
    {0.5, 0.5, 0.25, false, true, 0.6745441650878472},
    {0.5, 0.5, 0.25, false, false, 4.048085062758733},
    {0.5, 0.5, 0.5, true, true, 0.46239933107979964},
    {0.5, 0.5, 0.5, true, false, 0.22633684993944256},
    {0.5, 0.5, 0.5, false, true, 0.6980682738228097},
    {0.5, 0.5, 0.5, false, false, 2.036684841576131},
    {0.5, 0.5, 1.5, true, true, 0.5164481704168286},
    {0.5, 0.5, 1.5, true, false, -0.153285801075478},
    {0.5, 0.5, 1.5, false, true, 0.8653234499020399},
    {0.5, 0.5, 1.5, false, false, 0.5668584359180499},
    {0.5, 1.0, 0.25, true, true, 0.7635421697602383},
    {0.5, 1.0, 0.25, true, false, 0.7817613583483044},
    {0.5, 1.0, 0.25, false, true, 0.2925443969445283},
    {0.5, 1.0, 0.25, false, false, 4.033574527869715},
    {0.5, 1.0, 0.5, true, true, 0.8145794767121672},
    {0.5, 1.0, 0.5, true, false, 0.6099144165887842},
    {0.5, 1.0, 0.5, false, true, 0.30022898755851324},
    {0.5, 1.0, 0.5, false, false, 2.0896305364052092},
    {0.5, 1.0, 1.5, true, true, 1.070136780480731},
    {0.5, 1.0, 1.5, true, false, 0.026126333978988083},
    {0.5, 1.0, 1.5, false, true, 0.4686652679017303},
    {0.5, 1.0, 1.5, false, false, 0.9865376996889654},
    {0.5, 2.0, 0.25, true, true, 0.29202033256566245},
    {0.5, 2.0, 0.25, true, false, 1.782625686244628},
    {0.5, 2.0, 0.25, false, true, -0.718544875749731},
    {0.5, 2.0, 0.25, false, false, 3.1155335283108436},
    {0.5, 2.0, 0.5, true, true, 0.2960364535259354},
    {0.5, 2.0, 0.5, true, false, 1.6446063385026255},
    {0.5, 2.0, 0.5, false, true, -0.8485606675029777},
    {0.5, 2.0, 0.5, false, false, 1.2211107198327076},
    {0.5, 2.0, 1.5, true, true, 0.5129223649257848},
    {0.5, 2.0, 1.5, true, false, 1.8676703492918747},
    {0.5, 2.0, 1.5, false, true, -1.6270144632272268},
    {0.5, 2.0, 1.5, false, false, 0.39376667978516083},
    {1.0, 0.5, 0.25, true, true, 0.29284500574706435},
    {1.0, 0.5, 0.25, true, false, 0.20690151174175372},
    {1.0, 0.5, 0.25, false, true, 0.6769264789161441},
    {1.0, 0.5, 0.25, false, false, 3.7047148872472406},
    {1.0, 0.5, 0.5, true, true, 0.2791785790812333},
    {1.0, 0.5, 0.5, true, false, 0.12599819914142174},
    {1.0, 0.5, 0.5, false, true, 0.6408536490501976},
    {1.0, 0.5, 0.5, false, false, 1.695119289666325},
    {1.0, 0.5, 1.5, true, true, 0.21355911142622336},
    {1.0, 0.5, 1.5, true, false, -0.07569151166070161},
    {1.0, 0.5, 1.5, false, true, 0.5421711288694044},
    {1.0, 0.5, 1.5, false, false, 0.28669683139018537},
    {1.0, 1.0, 0.25, true, true, 0.5500489699446888},
    {1.0, 1.0, 0.25, true, false, 0.45693401740826645},
    {1.0, 1.0, 0.25, false, true, 0.5012281224365752},
    {1.0, 1.0, 0.25, false, false, 3.7186539320814633},
    {1.0, 1.0, 0.5, true, true, 0.5307567820438938},
    {1.0, 1.0, 0.5, true, false, 0.3022716256156838},
    {1.0, 1.0, 0.5, false, true, 0.47701612710017866},
    {1.0, 1.0, 0.5, false, false, 1.7391413560427655},
    {1.0, 1.0, 1.5, true, true, 0.4447528643535833},
    {1.0, 1.0, 1.5, true, false, -0.08291367647802725},
    {1.0, 1.0, 1.5, false, true, 0.4485451835811719},
    {1.0, 1.0, 1.5, false, false, 0.4311771679230743},
    {1.0, 2.0, 0.25, true, true, 0.7331872045900814},
    {1.0, 2.0, 0.25, true, false, 1.1523018905485736},
    {1.0, 2.0, 0.25, false, true, -0.15920504981125375},
    {1.0, 2.0, 0.25, false, false, 3.5345000764223244},
    {1.0, 2.0, 0.5, true, true, 0.7308135103817708},
    {1.0, 2.0, 0.5, true, false, 0.9072577432778832},
    {1.0, 2.0, 0.5, false, true, -0.17825076597120665},
    {1.0, 2.0, 0.5, false, false, 1.6548427278559212},
    {1.0, 2.0, 1.5, true, true, 0.7962068166694756},
    {1.0, 2.0, 1.5, true, false, 0.37891469330117855},
    {1.0, 2.0, 1.5, false, true, -0.16297912137372464},
    {1.0, 2.0, 1.5, false, false, 0.7262296364922306}};
}  // namespace oracle
