//! Taylor coefficients in t = φ², rounded from the exact rational series.
//! Generated by `frozen_table_matches_exact_series`; do not edit.

pub(super) const TAYLOR: [[f64; 48]; 27] = [
    // Delta
    [
        0.16666666666666666,
        -0.008333333333333333,
        0.0001984126984126984,
        -2.7557319223985893e-6,
        2.505210838544172e-8,
        -1.6059043836821613e-10,
        7.647163731819816e-13,
        -2.8114572543455206e-15,
        8.22063524662433e-18,
        -1.9572941063391263e-20,
        3.868170170630684e-23,
        -6.446950284384474e-26,
        9.183689863795546e-29,
        -1.1309962886447716e-31,
        1.216125041553518e-34,
        -1.151633562077195e-37,
        9.67759295863189e-41,
        -7.265460179153071e-44,
        4.902469756513544e-47,
        -2.9893108271424046e-50,
        1.6552108677421951e-53,
        -8.359650847182804e-57,
        3.866628513960594e-60,
        -1.643974708316579e-63,
        6.446959640457172e-67,
        -2.3392451525606576e-70,
        7.876246304918039e-74,
        -2.4674957095607893e-77,
        7.2106829618959365e-81,
        -1.9701319568021682e-84,
        5.043860616493007e-88,
        -1.2124664943492804e-91,
        2.74189618803546e-95,
        -5.843768516699616e-99,
        1.1758085546679308e-102,
        -2.2370786808750587e-106,
        4.030772397973079e-110,
        -6.887854405285506e-114,
        1.117795262136564e-117,
        -1.7249926884823517e-121,
        2.53451761457883e-125,
        -3.5497445582336554e-129,
        4.7443792545223946e-133,
        -6.057685462873333e-137,
        7.396441346609687e-141,
        -8.64474210683694e-145,
        9.680562269694223e-149,
        -1.039579281539328e-152,
    ],
    // A1
    [
        0.5,
        0.0,
        -0.001388888888888889,
        4.96031746031746e-5,
        -8.267195767195768e-7,
        8.35070279514724e-9,
        -5.735372798864862e-11,
        2.867686399432431e-13,
        -1.093344487801036e-15,
        3.288254098649732e-18,
        -8.007112253205516e-21,
        1.6117375710961184e-23,
        -2.7275558895472774e-26,
        3.9358670844838056e-29,
        -4.900983917460677e-32,
        5.320547056796641e-35,
        -5.080736303281742e-38,
        4.301152426058618e-41,
        -3.2503374485684795e-44,
        2.2061113904310947e-47,
        -1.3523072789453735e-50,
        7.523685762464524e-54,
        -3.8163623432791064e-57,
        1.7722047355652722e-60,
        -7.562283658256263e-64,
        2.975519834057157e-67,
        -1.0829838669262305e-70,
        3.65682864156909e-74,
        -1.1486617958300227e-77,
        3.3649853822181037e-81,
        -9.215133346332723e-85,
        2.3643096639810968e-88,
        -5.69491838254965e-92,
        1.2903040884872753e-95,
        -2.754919443586962e-99,
        5.552429285931896e-103,
        -1.0580777544679331e-106,
        1.9093132411451426e-110,
        -3.2673155512251766e-114,
        5.309527495148679e-118,
        -8.204233518391672e-122,
        1.206913149799443e-125,
        -1.692320080088138e-129,
        2.2643628260220518e-133,
        -2.8942274989283704e-137,
        3.537428470117676e-141,
        -4.13844037029428e-145,
        4.638602754228481e-149,
    ],
    // A2
    [
        0.16666666666666666,
        0.0,
        -0.0001984126984126984,
        5.5114638447971785e-6,
        -7.515632515632516e-8,
        6.423617534728645e-10,
        -3.823581865909908e-12,
        1.6868743526073125e-14,
        -5.75444467263703e-17,
        1.565835285071301e-19,
        -3.4813531535676156e-22,
        6.446950284384473e-25,
        -1.01020588501751e-27,
        1.357195546373726e-30,
        -1.5809625540195733e-33,
        1.612286986908073e-36,
        -1.4516389437947836e-39,
        1.1624736286644914e-42,
        -8.334198586073024e-46,
        5.380759488856328e-49,
        -3.144900648710171e-52,
        1.671930169436561e-55,
        -8.119919879317247e-59,
        3.616744358296474e-62,
        -1.4828007173051498e-65,
        5.614188366145578e-69,
        -1.9690615762295098e-72,
        6.415488844858053e-76,
        -1.9468843997119028e-79,
        5.516369479046071e-83,
        -1.4627195787829718e-86,
        3.637399483047841e-90,
        -8.499878182909925e-94,
        1.8700059253438772e-97,
        -3.880168230404172e-101,
        7.6060675149752e-105,
        -1.4107703392905776e-108,
        2.4796275859027824e-112,
        -4.1358424699052863e-116,
        6.554972216232937e-120,
        -9.884618696857438e-124,
        1.4198978232934623e-127,
        -1.9451954943541816e-131,
        2.5442278944068e-135,
        -3.180469779042165e-139,
        3.803686527008254e-143,
        -4.3562530213624e-147,
        4.7820646950809085e-151,
    ],
    // A3
    [
        0.041666666666666664,
        -0.002777777777777778,
        7.440476190476191e-5,
        -1.1022927689594355e-6,
        1.043837849393405e-8,
        -6.882447358637835e-11,
        3.3456341326711696e-13,
        -1.249536557486898e-15,
        3.6992858609809485e-18,
        -8.896791392450573e-21,
        1.77291132820573e-23,
        -2.975515515869757e-26,
        4.263856008190789e-29,
        -5.277982680342268e-32,
        5.700586132282115e-35,
        -5.419452056833859e-38,
        4.569974452687282e-41,
        -3.4415337690725073e-44,
        2.328673134343933e-47,
        -1.4234813462582878e-50,
        7.89987005058775e-54,
        -3.9980938834352543e-57,
        1.8527594962727845e-60,
        -7.891078599919579e-64,
        3.0994998271428715e-67,
        -1.1263032216032797e-70,
        3.797475897014055e-74,
        -1.1912048253052086e-77,
        3.4851634315830357e-81,
        -9.532896565171782e-85,
        2.4431199861138e-88,
        -5.878625427148026e-92,
        1.3306260912525026e-95,
        -2.838401850968385e-99,
        5.715736029635775e-103,
        -1.0883085474527313e-106,
        1.962349720065841e-110,
        -3.355621376933965e-114,
        5.449251902915749e-118,
        -8.414598480401715e-122,
        1.237085978544429e-125,
        -1.733596179602483e-129,
        2.3182762266416245e-133,
        -2.9615351151825186e-137,
        3.6178245717112596e-141,
        -4.230405711856375e-145,
        4.739441944537796e-149,
        -5.091816889172219e-153,
    ],
    // A4
    [
        0.008333333333333333,
        -0.0003968253968253968,
        8.267195767195768e-6,
        -1.0020843354176688e-7,
        8.029521918410807e-10,
        -4.58829823909189e-12,
        1.9680200780418645e-14,
        -6.576508197299464e-17,
        1.7615646957052136e-19,
        -3.868170170630684e-22,
        7.091645312822921e-25,
        -1.1020427836554655e-27,
        1.4702951752382032e-30,
        -1.7025750581749252e-33,
        1.7274503431157927e-36,
        -1.5484148733811025e-39,
        1.2351282304560222e-42,
        -8.824445561724379e-46,
        5.679690571570569e-49,
        -3.3104217354843905e-52,
        1.755526677908389e-55,
        -8.506582730713307e-59,
        3.7811418291281316e-62,
        -1.5472703137097215e-65,
        5.848112881401644e-69,
        -2.0478240392786902e-72,
        6.662238415814131e-76,
        -2.018991229330862e-79,
        5.7133826747262884e-83,
        -1.513158184947902e-86,
        3.758646132482769e-90,
        -8.774067801713472e-94,
        1.9284436105108735e-97,
        -3.997749085870965e-101,
        7.829775383062705e-105,
        -1.4510780632703084e-108,
        2.5485061299556374e-112,
        -4.247621996118943e-116,
        6.727471485081172e-120,
        -1.013807045831532e-123,
        1.4553952688757988e-127,
        -1.9926392868994058e-131,
        2.604804749035533e-135,
        -3.254434192508262e-139,
        3.890133948076623e-143,
        -4.4530586440593425e-147,
        4.886022623234841e-151,
        -5.143249383002241e-155,
    ],
    // B2
    [
        0.08333333333333333,
        0.0,
        -3.306878306878307e-5,
        -1.6534391534391535e-6,
        -6.26302709636043e-8,
        -2.1136760554749973e-9,
        -6.691268265342339e-11,
        -2.0338081777935496e-12,
        -6.010243439394491e-14,
        -1.7398949588464495e-15,
        -4.9581025455242067e-17,
        -1.3954464685812524e-18,
        -3.8881777435924145e-20,
        -1.0744220912445056e-21,
        -2.948338188038988e-23,
        -8.042706936421083e-25,
        -2.1827587134222975e-26,
        -5.8975919050644965e-28,
        -1.5872448237061577e-29,
        -4.2570403482611335e-31,
        -1.1382276348716055e-32,
        -3.0349097689365803e-34,
        -8.071892063453796e-36,
        -2.141997675982272e-37,
        -5.672368201661566e-39,
        -1.4992984180369785e-40,
        -3.956007561161229e-42,
        -1.0421511583467233e-43,
        -2.74133048100378e-45,
        -7.201051643077241e-47,
        -1.8891922502178063e-48,
        -4.950392972068957e-50,
        -1.2957474948472375e-51,
        -3.388043093664931e-53,
        -8.850201331160543e-55,
        -2.3097149793765234e-56,
        -6.022652165838492e-58,
        -1.5691429185656017e-59,
        -4.0850933743633265e-61,
        -1.062732895083691e-62,
        -2.7627742356549935e-64,
        -7.177629633156896e-66,
        -1.8635676960805494e-67,
        -4.835605585432461e-69,
        -1.2540368515697154e-70,
        -3.2503848359388283e-72,
        -8.42044190293708e-74,
        -2.1803211365704277e-75,
    ],
    // B4
    [
        -0.001388888888888889,
        -6.613756613756614e-5,
        -2.48015873015873e-6,
        -8.35070279514724e-8,
        -2.6420950693437467e-9,
        -8.029521918410807e-11,
        -2.372776207425808e-12,
        -6.868849645022276e-14,
        -1.9573818287022555e-15,
        -5.5090028283602297e-17,
        -1.5349911154393775e-18,
        -4.241648447555361e-20,
        -1.163957265514881e-21,
        -3.1751334332727565e-23,
        -8.617186003308303e-25,
        -2.328275960983784e-26,
        -6.266191399131027e-28,
        -1.6806121662771081e-29,
        -4.4935425898311966e-31,
        -1.1981343524964268e-32,
        -3.1866552573834097e-34,
        -8.456267875999214e-36,
        -2.239361206708739e-37,
        -5.918992906081635e-39,
        -1.5617691854551859e-40,
        -4.1142478636076775e-42,
        -1.0822338952062127e-43,
        -2.842861239559476e-45,
        -7.458232058901428e-47,
        -1.9543368105701446e-48,
        -5.115406071137923e-50,
        -1.3375458011326322e-51,
        -3.49391944034196e-53,
        -9.11838925028662e-55,
        -2.3776477728875976e-56,
        -6.194727942005306e-58,
        -1.6127302218590907e-59,
        -4.195501303400173e-61,
        -1.0906995502174724e-62,
        -2.833614600671788e-64,
        -7.357070373985818e-66,
        -1.9090205667166602e-67,
        -4.950739051752282e-69,
        -1.283200499280639e-70,
        -3.324257218573802e-72,
        -8.607562834113459e-74,
        -2.2277194221480455e-75,
        -5.762940476810163e-77,
    ],
    // ABar1
    [
        0.0,
        -0.005555555555555556,
        0.00029761904761904765,
        -6.613756613756614e-6,
        8.35070279514724e-8,
        -6.882447358637835e-10,
        4.014760959205403e-12,
        -1.7493511804816575e-14,
        5.918857377569518e-17,
        -1.6014224506411032e-19,
        3.5458226564114604e-22,
        -6.546134134913465e-25,
        1.0233254419657895e-27,
        -1.3722754968889896e-30,
        1.596164117038992e-33,
        -1.6258356170501575e-36,
        1.4623918248599302e-39,
        -1.1701214814846525e-42,
        8.38322328363816e-46,
        -5.409229115781494e-49,
        3.1599480202350998e-52,
        -1.6791994310428068e-55,
        8.152141783600252e-59,
        -3.6298961559630067e-62,
        1.4877599170285782e-65,
        -5.631516108016398e-69,
        1.9746874664473084e-72,
        -6.432506056648127e-76,
        1.9516915216865002e-79,
        -5.5290800077996335e-83,
        1.46587199166828e-86,
        -3.644747764831776e-90,
        8.516006984016017e-94,
        -1.8733452216391342e-97,
        3.886700500152327e-101,
        -7.618159832169119e-105,
        1.4128917984474054e-108,
        -2.483159818931134e-112,
        4.1414314462159696e-116,
        -6.563386814713339e-120,
        9.896687828355431e-124,
        -1.421548867274036e-127,
        1.9473520303789646e-131,
        -2.5469201990569658e-135,
        3.1836856231059086e-139,
        -3.807365140670738e-143,
        4.3602865889747727e-147,
        -4.786307875821886e-151,
    ],
    // ABar2
    [
        0.0,
        -0.0007936507936507937,
        3.306878306878307e-5,
        -6.012506012506013e-7,
        6.423617534728646e-9,
        -4.58829823909189e-11,
        2.3616240936502375e-13,
        -9.207111476219249e-16,
        2.8185035131283417e-18,
        -6.962706307135231e-21,
        1.418329062564584e-23,
        -2.424494124042024e-26,
        3.5287084205716874e-29,
        -4.4266951512548055e-32,
        4.836860960724219e-35,
        -4.6452446201433075e-38,
        3.952410337459271e-41,
        -3.0003114909862885e-44,
        2.0446886057654048e-47,
        -1.2579602594840682e-50,
        7.022106711633556e-54,
        -3.572764746899589e-57,
        1.663702404816378e-60,
        -7.117443443064719e-64,
        2.8070941830727894e-67,
        -1.0239120196393452e-70,
        3.464363976223348e-74,
        -1.0902552638386654e-77,
        3.1994942978467215e-81,
        -8.776317472697831e-85,
        2.2551876794896615e-88,
        -5.439922037062352e-92,
        1.234203910726959e-95,
        -2.638514396674837e-99,
        5.324247260482639e-103,
        -1.0157546442892158e-106,
        1.834924413568059e-110,
        -3.1432402771280176e-114,
        5.112878328661691e-118,
        -7.90769495748595e-122,
        1.164316215100639e-125,
        -1.6339642152575127e-129,
        2.188035989189848e-133,
        -2.798813405557105e-137,
        3.4233178743074285e-141,
        -4.0077527796534084e-145,
        4.495140813376055e-149,
        -4.834654420022107e-153,
    ],
    // ABar3
    [
        -0.005555555555555556,
        0.00029761904761904765,
        -6.613756613756614e-6,
        8.35070279514724e-8,
        -6.882447358637835e-10,
        4.014760959205403e-12,
        -1.7493511804816575e-14,
        5.918857377569518e-17,
        -1.6014224506411032e-19,
        3.5458226564114604e-22,
        -6.546134134913465e-25,
        1.0233254419657895e-27,
        -1.3722754968889896e-30,
        1.596164117038992e-33,
        -1.6258356170501575e-36,
        1.4623918248599302e-39,
        -1.1701214814846525e-42,
        8.38322328363816e-46,
        -5.409229115781494e-49,
        3.1599480202350998e-52,
        -1.6791994310428068e-55,
        8.152141783600252e-59,
        -3.6298961559630067e-62,
        1.4877599170285782e-65,
        -5.631516108016398e-69,
        1.9746874664473084e-72,
        -6.432506056648127e-76,
        1.9516915216865002e-79,
        -5.5290800077996335e-83,
        1.46587199166828e-86,
        -3.644747764831776e-90,
        8.516006984016017e-94,
        -1.8733452216391342e-97,
        3.886700500152327e-101,
        -7.618159832169119e-105,
        1.4128917984474054e-108,
        -2.483159818931134e-112,
        4.1414314462159696e-116,
        -6.563386814713339e-120,
        9.896687828355431e-124,
        -1.421548867274036e-127,
        1.9473520303789646e-131,
        -2.5469201990569658e-135,
        3.1836856231059086e-139,
        -3.807365140670738e-143,
        4.3602865889747727e-147,
        -4.786307875821886e-151,
        5.040384395342196e-155,
    ],
    // ABar4
    [
        -0.0007936507936507937,
        3.306878306878307e-5,
        -6.012506012506013e-7,
        6.423617534728646e-9,
        -4.58829823909189e-11,
        2.3616240936502375e-13,
        -9.207111476219249e-16,
        2.8185035131283417e-18,
        -6.962706307135231e-21,
        1.418329062564584e-23,
        -2.424494124042024e-26,
        3.5287084205716874e-29,
        -4.4266951512548055e-32,
        4.836860960724219e-35,
        -4.6452446201433075e-38,
        3.952410337459271e-41,
        -3.0003114909862885e-44,
        2.0446886057654048e-47,
        -1.2579602594840682e-50,
        7.022106711633556e-54,
        -3.572764746899589e-57,
        1.663702404816378e-60,
        -7.117443443064719e-64,
        2.8070941830727894e-67,
        -1.0239120196393452e-70,
        3.464363976223348e-74,
        -1.0902552638386654e-77,
        3.1994942978467215e-81,
        -8.776317472697831e-85,
        2.2551876794896615e-88,
        -5.439922037062352e-92,
        1.234203910726959e-95,
        -2.638514396674837e-99,
        5.324247260482639e-103,
        -1.0157546442892158e-106,
        1.834924413568059e-110,
        -3.1432402771280176e-114,
        5.112878328661691e-118,
        -7.90769495748595e-122,
        1.164316215100639e-125,
        -1.6339642152575127e-129,
        2.188035989189848e-133,
        -2.798813405557105e-137,
        3.4233178743074285e-141,
        -4.0077527796534084e-145,
        4.495140813376055e-149,
        -4.834654420022107e-153,
        4.990479599348709e-157,
    ],
    // BBar2
    [
        0.0,
        -0.00013227513227513228,
        -9.92063492063492e-6,
        -5.010421677088344e-7,
        -2.1136760554749974e-8,
        -8.029521918410807e-10,
        -2.8473314489109696e-11,
        -9.616389503031186e-13,
        -3.131810925923609e-14,
        -9.916205091048413e-16,
        -3.069982230878755e-17,
        -9.331626584621793e-19,
        -2.793497437235715e-20,
        -8.255346926509166e-22,
        -2.412812080926325e-23,
        -6.984827882951352e-25,
        -2.0051812477219287e-26,
        -5.714081365342167e-28,
        -1.6176753323392308e-29,
        -4.552910539486422e-31,
        -1.2746621029533638e-32,
        -3.55163250791967e-34,
        -9.853189309518451e-36,
        -2.7227367367975516e-37,
        -7.496492090184892e-39,
        -2.057123931803839e-40,
        -5.6276162550723064e-42,
        -1.5351450693621168e-43,
        -4.1766099529847995e-45,
        -1.1335153501306838e-46,
        -3.0692436426827534e-48,
        -8.29278396702232e-50,
        -2.2361084418188543e-51,
        -6.01813690518917e-53,
        -1.6168004855635664e-54,
        -4.336309559403714e-56,
        -1.1611657597385454e-57,
        -3.1046709645161284e-59,
        -8.289316581652791e-61,
        -2.210219388523995e-62,
        -5.885656299188655e-64,
        -1.5653968647076615e-65,
        -4.158620803471917e-67,
        -1.1035524293813495e-68,
        -2.9253463523449455e-70,
        -7.746806550702112e-72,
        -2.049501868376202e-73,
        -5.417164048201553e-75,
    ],
    // BBar4
    [
        -0.00013227513227513228,
        -9.92063492063492e-6,
        -5.010421677088344e-7,
        -2.1136760554749974e-8,
        -8.029521918410807e-10,
        -2.8473314489109696e-11,
        -9.616389503031186e-13,
        -3.131810925923609e-14,
        -9.916205091048413e-16,
        -3.069982230878755e-17,
        -9.331626584621793e-19,
        -2.793497437235715e-20,
        -8.255346926509166e-22,
        -2.412812080926325e-23,
        -6.984827882951352e-25,
        -2.0051812477219287e-26,
        -5.714081365342167e-28,
        -1.6176753323392308e-29,
        -4.552910539486422e-31,
        -1.2746621029533638e-32,
        -3.55163250791967e-34,
        -9.853189309518451e-36,
        -2.7227367367975516e-37,
        -7.496492090184892e-39,
        -2.057123931803839e-40,
        -5.6276162550723064e-42,
        -1.5351450693621168e-43,
        -4.1766099529847995e-45,
        -1.1335153501306838e-46,
        -3.0692436426827534e-48,
        -8.29278396702232e-50,
        -2.2361084418188543e-51,
        -6.01813690518917e-53,
        -1.6168004855635664e-54,
        -4.336309559403714e-56,
        -1.1611657597385454e-57,
        -3.1046709645161284e-59,
        -8.289316581652791e-61,
        -2.210219388523995e-62,
        -5.885656299188655e-64,
        -1.5653968647076615e-65,
        -4.158620803471917e-67,
        -1.1035524293813495e-68,
        -2.9253463523449455e-70,
        -7.746806550702112e-72,
        -2.049501868376202e-73,
        -5.417164048201553e-75,
        -1.4305744784083232e-76,
    ],
    // ABreve1
    [
        -0.011111111111111112,
        0.0011904761904761906,
        -3.968253968253968e-5,
        6.680562236117792e-7,
        -6.882447358637835e-9,
        4.8177131510464846e-11,
        -2.4490916526743203e-13,
        9.470171804111228e-16,
        -2.882560411153986e-18,
        7.091645312822921e-21,
        -1.4401495096809625e-23,
        2.4559810607178945e-26,
        -3.567916291911373e-29,
        4.4692595277091786e-32,
        -4.877506851150473e-35,
        4.679653839551777e-38,
        -3.9784130370478184e-41,
        3.017960382109737e-44,
        -2.0555070639969678e-47,
        1.26397920809404e-50,
        -7.052637610379788e-54,
        3.5869423847841107e-57,
        -1.669752231742983e-60,
        7.141247601737176e-64,
        -2.8157580540081992e-67,
        1.0268374825526004e-70,
        -3.4735532705899882e-74,
        1.09294725214444e-77,
        -3.2068664045237875e-81,
        8.79523195000968e-85,
        -2.2597436141957014e-88,
        5.4502444697702506e-92,
        -1.2364078462818286e-95,
        2.6429563401035823e-99,
        -5.332711882518383e-103,
        1.017282094882132e-106,
        -1.8375382660090393e-110,
        3.1474878991241366e-114,
        -5.119441715476404e-118,
        7.917350262684345e-122,
        -1.1656700711647095e-125,
        1.6357757055183303e-129,
        -2.1903513711889907e-133,
        2.8016433483331993e-137,
        -3.426628626603664e-141,
        4.011463661856791e-145,
        -4.499129403272572e-149,
        4.838769019528509e-153,
    ],
    // ABreve2
    [
        -0.0015873015873015873,
        0.00013227513227513228,
        -3.6075036075036075e-6,
        5.138894027782917e-8,
        -4.5882982390918897e-10,
        2.833948912380285e-12,
        -1.2889956066706948e-14,
        4.509605621005347e-17,
        -1.2532871352843415e-19,
        2.836658125129168e-22,
        -5.3338870728924535e-25,
        8.468900209372051e-28,
        -1.1509407393262493e-30,
        1.3543210690027814e-33,
        -1.3935733860429923e-36,
        1.2647713079869667e-39,
        -1.0201059069353382e-42,
        7.360878980755456e-46,
        -4.7802489860394596e-49,
        2.808842684653422e-52,
        -1.5005611936978274e-55,
        7.320290581192063e-59,
        -3.2740239838097708e-62,
        1.3474052078749388e-65,
        -5.119560098196726e-69,
        1.801469267636141e-72,
        -5.887378424728794e-76,
        1.791716806794164e-79,
        -5.090264134164742e-83,
        1.353112607693797e-86,
        -3.3727516629786588e-90,
        7.898905028652538e-94,
        -1.7414195018053924e-97,
        3.620488137128195e-101,
        -7.110282510024511e-105,
        1.3211455777690024e-108,
        -2.3259978050747334e-112,
        3.8857875297828846e-116,
        -6.168002066839041e-120,
        9.314529720805113e-124,
        -1.3398506565111604e-127,
        1.8379502309194722e-131,
        -2.4069795287791106e-135,
        3.012519729390537e-139,
        -3.6069775016880673e-143,
        4.13552954830597e-147,
        -4.54457515482078e-151,
        4.790860415374761e-155,
    ],
    // ABreve3
    [
        0.0005952380952380953,
        -2.6455026455026456e-5,
        5.010421677088344e-7,
        -5.505957886910268e-9,
        4.0147609592054033e-11,
        -2.099221416577989e-13,
        8.286400328597324e-16,
        -2.562275921025765e-18,
        6.3824807815406284e-21,
        -1.3092268269826931e-23,
        2.2513159723247367e-26,
        -3.293461192533575e-29,
        4.15002670430138e-32,
        -4.5523397277404414e-35,
        4.387175474579791e-38,
        -3.744388740750888e-41,
        2.850295916436974e-44,
        -1.9473224816813377e-47,
        1.200780247689338e-50,
        -6.716797724171227e-54,
        3.423899549112106e-57,
        -1.597154308623723e-60,
        6.84369561833146e-64,
        -2.703127731847871e-67,
        9.873437332236543e-71,
        -3.344903149457026e-74,
        1.0539134217107101e-77,
        -3.096284804367795e-81,
        8.502057551676024e-85,
        -2.1868486588990658e-88,
        5.2799243300899304e-92,
        -1.1989409418490459e-95,
        2.565222330100536e-99,
        -5.180348685875001e-103,
        9.890242589131838e-107,
        -1.7878750696304165e-110,
        3.0646592701998173e-114,
        -4.988173979182137e-118,
        7.719416506117237e-122,
        -1.1372390938192289e-125,
        1.596828664910751e-129,
        -2.139412967207851e-133,
        2.7379696358710814e-137,
        -3.3504813237902494e-141,
        3.9242579300772956e-145,
        -4.403403245756135e-149,
        4.7379613316216645e-153,
        -4.892627058185009e-157,
    ],
    // ABreve4
    [
        6.613756613756614e-5,
        -2.405002405002405e-6,
        3.8541705208371876e-8,
        -3.670638591273512e-10,
        2.3616240936502374e-12,
        -1.1048533771463099e-14,
        3.9459049183796784e-17,
        -1.114033009141637e-19,
        2.5529923126162516e-22,
        -4.848988248084048e-25,
        7.763158525257713e-28,
        -1.0624068363011533e-30,
        1.257583849788297e-33,
        -1.3006684936401261e-36,
        1.1857231012377813e-39,
        -9.600996771156123e-43,
        6.951941259602376e-46,
        -4.528656934142646e-49,
        2.668400550420751e-52,
        -1.4291058987598355e-55,
        6.987550100228788e-59,
        -3.131675114948476e-62,
        1.2912633242134832e-65,
        -4.914777694268856e-69,
        1.7321819881116742e-72,
        -5.66932737196106e-76,
        1.7277269208372294e-79,
        -4.9147377847107855e-83,
        1.3080088541040037e-86,
        -3.2639532222374117e-90,
        7.652064246507145e-94,
        -1.6886492138718957e-97,
        3.514003191918542e-101,
        -6.907131581166668e-105,
        1.2844470894976414e-108,
        -2.2631329995321728e-112,
        3.783529963209651e-116,
        -6.009848167689322e-120,
        9.081666477784985e-124,
        -1.3071713722060101e-127,
        1.7941895111356753e-131,
        -2.3510032606679685e-135,
        2.9440533719043883e-139,
        -3.526822446094999e-143,
        4.045626732038449e-147,
        -4.447882066420338e-151,
        4.691050823387787e-155,
        -4.750123357461174e-159,
    ],
    // BBreve2
    [
        -0.00026455026455026457,
        -3.968253968253968e-5,
        -3.006253006253006e-6,
        -1.690940844379998e-7,
        -8.029521918410807e-9,
        -3.4167977386931636e-10,
        -1.346294530424366e-11,
        -5.010897481477774e-13,
        -1.7849169163887143e-14,
        -6.13996446175751e-16,
        -2.0529578486167947e-17,
        -6.7043938493657155e-19,
        -2.1463902008923833e-20,
        -6.75587382659371e-22,
        -2.0954483648854055e-23,
        -6.416579992710172e-25,
        -1.9427876642163368e-26,
        -5.823631196421231e-28,
        -1.7301060050048404e-29,
        -5.098648411813456e-31,
        -1.4916856533262615e-32,
        -4.3354032961881186e-34,
        -1.2524588989268738e-35,
        -3.5983162032887484e-37,
        -1.0285619659019195e-38,
        -2.9263604526375993e-40,
        -8.289783374555431e-42,
        -2.338901573671488e-43,
        -6.574389030757966e-45,
        -1.8415461856096523e-46,
        -5.1415260595538386e-48,
        -1.4311094027640668e-49,
        -3.9719703574248516e-51,
        -1.0994243301832251e-52,
        -3.0354166915826e-54,
        -8.360393470117527e-56,
        -2.297456513741935e-57,
        -6.299880602056121e-59,
        -1.7239711230487158e-60,
        -4.708525039350924e-62,
        -1.2836254290602823e-63,
        -3.4932414749164104e-65,
        -9.490550892679605e-67,
        -2.574304790063552e-68,
        -6.972125895631901e-70,
        -1.885541718906106e-71,
        -5.0921342053094604e-73,
        -1.3733514992719902e-74,
    ],
    // BBreve4
    [
        -1.984126984126984e-5,
        -2.0041686708353374e-6,
        -1.2682056332849984e-7,
        -6.423617534728646e-9,
        -2.84733144891097e-10,
        -1.1539667403637423e-11,
        -4.3845352962930527e-13,
        -1.586592814567746e-14,
        -5.525968015581759e-16,
        -1.8663253169243588e-17,
        -6.145694361918572e-19,
        -1.9812832623622e-20,
        -6.273311410408445e-22,
        -1.9557518072263784e-23,
        -6.015543743165786e-25,
        -1.8285060369094935e-26,
        -5.500096129953385e-28,
        -1.639047794215112e-29,
        -4.843715991222782e-31,
        -1.420653003167868e-32,
        -4.13833950999775e-34,
        -1.1980041641909227e-35,
        -3.4483863614850504e-37,
        -9.874194872658427e-39,
        -2.813808127536153e-40,
        -7.982754360683008e-42,
        -2.255369374611792e-43,
        -6.34768596073183e-45,
        -1.780161312755997e-46,
        -4.975670380213392e-48,
        -1.3863872339276897e-49,
        -3.8516076193210687e-51,
        -1.0670883204719538e-52,
        -2.9486905003945255e-54,
        -8.128160318169817e-56,
        -2.2353630944516123e-57,
        -6.134094270423065e-59,
        -1.679766735278236e-60,
        -4.5908119133671505e-62,
        -1.2523174917661292e-63,
        -3.410069058846972e-65,
        -9.269840406803336e-67,
        -2.5157978630166533e-68,
        -6.817189764617859e-70,
        -1.844551681538582e-71,
        -4.983790924345429e-73,
        -1.3447400097038237e-74,
        -3.623687486021282e-76,
    ],
    // So3Inv
    [
        0.08333333333333333,
        0.001388888888888889,
        3.306878306878307e-5,
        8.267195767195768e-7,
        2.08767569878681e-8,
        5.284190138687493e-10,
        1.3382536530684679e-11,
        3.3896802963225827e-13,
        8.586062056277845e-15,
        2.174868698558062e-16,
        5.5090028283602295e-18,
        1.3954464685812522e-19,
        3.534707039629467e-21,
        8.953517427037546e-23,
        2.267952452337683e-24,
        5.744790668872202e-26,
        1.455172475614865e-27,
        3.6859949406653103e-29,
        9.336734257095045e-31,
        2.36502241570063e-32,
        5.990671762482134e-34,
        1.5174548844682903e-35,
        3.843758125454189e-37,
        9.736353072646691e-39,
        2.466247044200681e-40,
        6.247076741820743e-42,
        1.5824030244644914e-43,
        4.008273685948936e-45,
        1.0153075855569557e-46,
        2.5718041582418717e-48,
        6.514456035233815e-50,
        1.6501309906896525e-51,
        4.179830628539476e-53,
        1.058763466770291e-54,
        2.6818791912607708e-56,
        6.793279351107421e-58,
        1.7207577616681404e-59,
        4.358730329348894e-61,
        1.1040792903684666e-62,
        2.7966655133781345e-64,
        7.084036501679471e-66,
        1.794407408289224e-67,
        4.545287063611096e-69,
        1.1513346631982051e-70,
        2.9163647710923614e-72,
        7.387238263497337e-74,
        1.8712093117637953e-75,
        4.739828557761799e-77,
    ],
    // So3InvBar
    [
        0.002777777777777778,
        0.00013227513227513228,
        4.96031746031746e-6,
        1.670140559029448e-7,
        5.2841901386874934e-9,
        1.6059043836821613e-10,
        4.745552414851616e-12,
        1.3737699290044552e-13,
        3.914763657404511e-15,
        1.1018005656720459e-16,
        3.069982230878755e-18,
        8.483296895110721e-20,
        2.327914531029762e-21,
        6.350266866545513e-23,
        1.7234372006616606e-24,
        4.656551921967568e-26,
        1.2532382798262054e-27,
        3.3612243325542163e-29,
        8.987085179662393e-31,
        2.3962687049928537e-32,
        6.373310514766819e-34,
        1.6912535751998429e-35,
        4.478722413417478e-37,
        1.183798581216327e-38,
        3.1235383709103717e-40,
        8.228495727215355e-42,
        2.1644677904124254e-43,
        5.685722479118952e-45,
        1.4916464117802855e-46,
        3.908673621140289e-48,
        1.0230812142275845e-49,
        2.6750916022652644e-51,
        6.98783888068392e-53,
        1.823677850057324e-54,
        4.755295545775195e-56,
        1.2389455884010612e-57,
        3.2254604437181814e-59,
        8.391002606800347e-61,
        2.1813991004349448e-62,
        5.667229201343576e-64,
        1.4714140747971637e-65,
        3.8180411334333205e-67,
        9.901478103504564e-69,
        2.566400998561278e-70,
        6.648514437147604e-72,
        1.7215125668226918e-73,
        4.455438844296091e-75,
        1.1525880953620326e-76,
    ],
    // PitchRot
    [
        -0.08333333333333333,
        0.005555555555555556,
        -0.00014880952380952382,
        2.204585537918871e-6,
        -2.08767569878681e-8,
        1.376489471727567e-10,
        -6.691268265342339e-13,
        2.499073114973796e-15,
        -7.398571721961897e-18,
        1.7793582784901146e-20,
        -3.54582265641146e-23,
        5.951031031739514e-26,
        -8.527712016381578e-29,
        1.0555965360684537e-31,
        -1.140117226456423e-34,
        1.0838904113667718e-37,
        -9.139948905374564e-41,
        6.883067538145015e-44,
        -4.657346268687866e-47,
        2.8469626925165756e-50,
        -1.57997401011755e-53,
        7.996187766870509e-57,
        -3.705518992545569e-60,
        1.5782157199839158e-63,
        -6.198999654285743e-67,
        2.2526064432065593e-70,
        -7.59495179402811e-74,
        2.382409650610417e-77,
        -6.9703268631660715e-81,
        1.9065793130343564e-84,
        -4.8862399722276e-88,
        1.1757250854296052e-91,
        -2.6612521825050052e-95,
        5.67680370193677e-99,
        -1.143147205927155e-102,
        2.1766170949054626e-106,
        -3.924699440131682e-110,
        6.71124275386793e-114,
        -1.0898503805831498e-117,
        1.682919696080343e-121,
        -2.474171957088858e-125,
        3.467192359204966e-129,
        -4.636552453283249e-133,
        5.923070230365037e-137,
        -7.235649143422519e-141,
        8.46081142371275e-145,
        -9.478883889075593e-149,
        1.0183633778344437e-152,
    ],
    // PitchRotSq
    [
        -0.016666666666666666,
        0.0007936507936507937,
        -1.6534391534391536e-5,
        2.0041686708353376e-7,
        -1.6059043836821615e-9,
        9.17659647818378e-12,
        -3.936040156083729e-14,
        1.3153016394598927e-16,
        -3.523129391410427e-19,
        7.736340341261368e-22,
        -1.4183290625645841e-24,
        2.204085567310931e-27,
        -2.9405903504764064e-30,
        3.4051501163498504e-33,
        -3.4549006862315854e-36,
        3.096829746762205e-39,
        -2.4702564609120444e-42,
        1.7648891123448757e-45,
        -1.1359381143141137e-48,
        6.620843470968781e-52,
        -3.511053355816778e-55,
        1.7013165461426614e-58,
        -7.562283658256263e-62,
        3.094540627419443e-65,
        -1.1696225762803288e-68,
        4.0956480785573804e-72,
        -1.3324476831628261e-75,
        4.037982458661724e-79,
        -1.1426765349452577e-82,
        3.026316369895804e-86,
        -7.517292264965538e-90,
        1.7548135603426945e-93,
        -3.856887221021747e-97,
        7.99549817174193e-101,
        -1.565955076612541e-104,
        2.9021561265406168e-108,
        -5.097012259911275e-112,
        8.495243992237886e-116,
        -1.3454942970162344e-119,
        2.027614091663064e-123,
        -2.9107905377515976e-127,
        3.9852785737988115e-131,
        -5.209609498071066e-135,
        6.508868385016524e-139,
        -7.780267896153246e-143,
        8.906117288118685e-147,
        -9.772045246469683e-151,
        1.0286498766004482e-154,
    ],
    // PitchRotBar
    [
        0.011111111111111112,
        -0.0005952380952380953,
        1.3227513227513228e-5,
        -1.670140559029448e-7,
        1.376489471727567e-9,
        -8.029521918410807e-12,
        3.498702360963315e-14,
        -1.1837714755139035e-16,
        3.2028449012822063e-19,
        -7.091645312822921e-22,
        1.309226826982693e-24,
        -2.046650883931579e-27,
        2.744550993777979e-30,
        -3.192328234077984e-33,
        3.251671234100315e-36,
        -2.9247836497198605e-39,
        2.340242962969305e-42,
        -1.676644656727632e-45,
        1.0818458231562988e-48,
        -6.3198960404701995e-52,
        3.3583988620856136e-55,
        -1.6304283567200504e-58,
        7.2597923119260134e-62,
        -2.9755198340571564e-65,
        1.1263032216032797e-68,
        -3.949374932894617e-72,
        1.2865012113296254e-75,
        -3.9033830433730003e-79,
        1.1058160015599267e-82,
        -2.93174398333656e-86,
        7.289495529663552e-90,
        -1.7032013968032033e-93,
        3.7466904432782684e-97,
        -7.773401000304653e-101,
        1.5236319664338238e-104,
        -2.825783596894811e-108,
        4.966319637862268e-112,
        -8.282862892431939e-116,
        1.3126773629426678e-119,
        -1.9793375656710863e-123,
        2.843097734548072e-127,
        -3.894704060757929e-131,
        5.0938403981139316e-135,
        -6.367371246211817e-139,
        7.614730281341476e-143,
        -8.720573177949545e-147,
        9.572615751643772e-151,
        -1.0080768790684393e-154,
    ],
    // PitchRotSqBar
    [
        0.0015873015873015873,
        -6.613756613756614e-5,
        1.2025012025012026e-6,
        -1.2847235069457292e-8,
        9.17659647818378e-11,
        -4.723248187300475e-13,
        1.8414222952438498e-15,
        -5.6370070262566834e-18,
        1.3925412614270462e-20,
        -2.836658125129168e-23,
        4.848988248084048e-26,
        -7.057416841143375e-29,
        8.853390302509611e-32,
        -9.673721921448438e-35,
        9.290489240286615e-38,
        -7.904820674918542e-41,
        6.000622981972577e-44,
        -4.0893772115308096e-47,
        2.5159205189681365e-50,
        -1.4044213423267111e-53,
        7.145529493799178e-57,
        -3.327404809632756e-60,
        1.4234886886129437e-63,
        -5.614188366145579e-67,
        2.0478240392786903e-70,
        -6.928727952446696e-74,
        2.180510527677331e-77,
        -6.398988595693443e-81,
        1.7552634945395662e-84,
        -4.510375358979323e-88,
        1.0879844074124704e-91,
        -2.468407821453918e-95,
        5.277028793349674e-99,
        -1.0648494520965278e-102,
        2.0315092885784316e-106,
        -3.669848827136118e-110,
        6.286480554256035e-114,
        -1.0225756657323382e-117,
        1.58153899149719e-121,
        -2.328632430201278e-125,
        3.267928430515025e-129,
        -4.376071978379696e-133,
        5.59762681111421e-137,
        -6.846635748614857e-141,
        8.015505559306817e-145,
        -8.99028162675211e-149,
        9.669308840044213e-153,
        -9.980959198697418e-157,
    ],
    // InvPitch
    [
        0.002777777777777778,
        0.00013227513227513228,
        4.96031746031746e-6,
        1.670140559029448e-7,
        5.2841901386874934e-9,
        1.6059043836821613e-10,
        4.745552414851616e-12,
        1.3737699290044552e-13,
        3.914763657404511e-15,
        1.1018005656720459e-16,
        3.069982230878755e-18,
        8.483296895110721e-20,
        2.327914531029762e-21,
        6.350266866545513e-23,
        1.7234372006616606e-24,
        4.656551921967568e-26,
        1.2532382798262054e-27,
        3.3612243325542163e-29,
        8.987085179662393e-31,
        2.3962687049928537e-32,
        6.373310514766819e-34,
        1.6912535751998429e-35,
        4.478722413417478e-37,
        1.183798581216327e-38,
        3.1235383709103717e-40,
        8.228495727215355e-42,
        2.1644677904124254e-43,
        5.685722479118952e-45,
        1.4916464117802855e-46,
        3.908673621140289e-48,
        1.0230812142275845e-49,
        2.6750916022652644e-51,
        6.98783888068392e-53,
        1.823677850057324e-54,
        4.755295545775195e-56,
        1.2389455884010612e-57,
        3.2254604437181814e-59,
        8.391002606800347e-61,
        2.1813991004349448e-62,
        5.667229201343576e-64,
        1.4714140747971637e-65,
        3.8180411334333205e-67,
        9.901478103504564e-69,
        2.566400998561278e-70,
        6.648514437147604e-72,
        1.7215125668226918e-73,
        4.455438844296091e-75,
        1.1525880953620326e-76,
    ],
    // InvPitchBar
    [
        0.00026455026455026457,
        1.984126984126984e-5,
        1.0020843354176687e-6,
        4.227352110949995e-8,
        1.6059043836821615e-9,
        5.694662897821939e-11,
        1.9232779006062372e-12,
        6.263621851847218e-14,
        1.9832410182096826e-15,
        6.13996446175751e-17,
        1.8663253169243587e-18,
        5.58699487447143e-20,
        1.6510693853018332e-21,
        4.82562416185265e-23,
        1.3969655765902704e-24,
        4.0103624954438573e-26,
        1.1428162730684334e-27,
        3.2353506646784616e-29,
        9.105821078972844e-31,
        2.5493242059067277e-32,
        7.10326501583934e-34,
        1.9706378619036901e-35,
        5.445473473595103e-37,
        1.4992984180369784e-38,
        4.114247863607678e-40,
        1.1255232510144613e-41,
        3.0702901387242337e-43,
        8.353219905969599e-45,
        2.2670307002613676e-46,
        6.138487285365507e-48,
        1.658556793404464e-49,
        4.4722168836377087e-51,
        1.203627381037834e-52,
        3.233600971127133e-54,
        8.672619118807428e-56,
        2.3223315194770907e-57,
        6.209341929032257e-59,
        1.6578633163305582e-60,
        4.42043877704799e-62,
        1.177131259837731e-63,
        3.130793729415323e-65,
        8.317241606943834e-67,
        2.207104858762699e-68,
        5.850692704689891e-70,
        1.5493613101404225e-71,
        4.099003736752404e-73,
        1.0834328096403106e-74,
        2.8611489568166464e-76,
    ],
];
