"""Taylor coefficients (about z = 0) of the Riemann-Siegel correction
functions C0..C4; generated by tools/gen_rs_coeffs.py -- do not edit.
"""

import numpy as np

C0 = np.array([
    0.3826834323650897717285,
    0.0,
    0.4372404680775204493603,
    0.0,
    0.1323765754803435233240,
    0.0,
    -0.01360502604767418865498,
    0.0,
    -0.01356762197010358088792,
    0.0,
    -0.001623725323144465282855,
    0.0,
    0.0002970535373337969078313,
    0.0,
    0.00007943300879521469588016,
    0.0,
    4.655612461450450503706e-7,
    0.0,
    -0.000001432725163095510575408,
    0.0,
    -1.035484711231294607501e-7,
    0.0,
    1.235792708386173805613e-8,
    0.0,
    1.788108385795490498567e-9,
    0.0,
    -3.391414389927035906941e-11,
    0.0,
    -1.632663390256590510137e-11,
    0.0,
    -3.785109318541220382855e-13,
    0.0,
    9.327423259201724845662e-14,
    0.0,
    5.221843015978136855314e-15,
    0.0,
    -3.350673072744263789515e-16,
    0.0,
    -3.412426522811726494081e-17,
    0.0,
    5.751203341432399160340e-19,
    0.0,
    1.489530136321150545476e-19,
    0.0,
    1.256537271702141685330e-21,
    0.0,
    -4.721295250143425668954e-22,
    0.0,
    -1.326906936303961999274e-23,
    0.0,
    1.105343999512141834454e-24,
    0.0,
    5.499646377527465511151e-26,
    0.0,
    -1.823137650231802627616e-27,
    0.0,
    -1.568940373772087996768e-28,
    0.0,
    1.583963508823808328473e-30,
    0.0,
    3.434620725437490718317e-31,
    0.0,
    1.702103350146380285388e-33,
    0.0,
    -5.995119300370676330843e-34,
    0.0,
    -1.048768091923829124830e-35,
    0.0,
    8.422208572595765820453e-37,
    0.0,
    2.587639629629745389348e-38,
    0.0,
    -8.173331431774114738296e-40,
    0.0,
    4.240289849939111771765e-40,
    0.0,
    1.879647268724869299664e-39,
    0.0,
    7.515635454100426892940e-39,
    0.0,
    3.006228306494299668227e-38,
    0.0,
    1.202491332989756899183e-37,
    0.0,
    4.809965334998825321467e-37,
    0.0,
    1.923986134001118043137e-36,
    0.0,
    7.695944536004169759070e-36,
])

C1 = np.array([
    0.0,
    -0.02682510262837534702999,
    0.0,
    0.01378477342635185304987,
    0.0,
    0.03849125048223508222874,
    0.0,
    0.009871066299062076472012,
    0.0,
    -0.003310759760858404332909,
    0.0,
    -0.001464780857795415082498,
    0.0,
    -0.00001320794062487696367516,
    0.0,
    0.00005922748701847141323223,
    0.0,
    0.000005980242585373448587711,
    0.0,
    -9.641322456169826352673e-7,
    0.0,
    -1.833473372271441176002e-7,
    0.0,
    4.467087562717833599561e-9,
    0.0,
    2.709635082177274321693e-9,
    0.0,
    7.785288654315851046295e-11,
    0.0,
    -2.343762601089368853248e-11,
    0.0,
    -1.583017278998752164216e-12,
    0.0,
    1.211994157372379124665e-13,
    0.0,
    1.458378116110830701758e-14,
    0.0,
    -2.878630525813191750456e-16,
    0.0,
    -8.662862902123724122528e-17,
    0.0,
    -8.430722727137041271560e-19,
    0.0,
    3.630807223097346200173e-19,
    0.0,
    1.162669821283829671941e-20,
    0.0,
    -1.097548671152753181590e-21,
    0.0,
    -6.157399020468427103894e-23,
    0.0,
    2.290928006767847150833e-24,
    0.0,
    2.203281174884879509216e-25,
    0.0,
    -2.476025180040289712255e-27,
    0.0,
    -5.954277215584154820498e-28,
    0.0,
    -3.261202074899317404114e-30,
    0.0,
    1.265403558135897996079e-30,
    0.0,
    2.431284271188080233534e-32,
    0.0,
    -2.138319772865574320131e-33,
    0.0,
    -7.175940775817616192812e-35,
    0.0,
    2.469488475835997195018e-36,
    0.0,
    -1.392520601950944939090e-36,
    0.0,
    -6.694250226319782047447e-36,
    0.0,
    -2.896567377832469473375e-35,
    0.0,
    -1.251274659166227189672e-34,
    0.0,
    -5.394979784489575668216e-34,
    0.0,
    -2.321839449458793685866e-33,
    0.0,
    -9.975108066739811812621e-33,
    0.0,
    -4.278399291818319231793e-32,
])

C2 = np.array([
    0.005188542830293168493785,
    0.0,
    0.0003094658388063474603346,
    0.0,
    -0.01133594107822937338218,
    0.0,
    0.002233045741958144772057,
    0.0,
    0.005196637408862330205117,
    0.0,
    0.0003439914407620833669466,
    0.0,
    -0.0005910648427470582821732,
    0.0,
    -0.0001022997254793585745443,
    0.0,
    0.00002088839221699275540807,
    0.0,
    0.000005927665493096535957892,
    0.0,
    -1.642383836243627597769e-7,
    0.0,
    -1.516119970094068286173e-7,
    0.0,
    -5.907803698206667962923e-9,
    0.0,
    2.091151485947818897775e-9,
    0.0,
    1.781564958329235105380e-10,
    0.0,
    -1.616407245535383075286e-11,
    0.0,
    -2.380696249666761570721e-12,
    0.0,
    5.398265295542594918182e-14,
    0.0,
    1.975014219696951527331e-14,
    0.0,
    2.333286873288263483105e-16,
    0.0,
    -1.118751761004808020820e-16,
    0.0,
    -4.164009488883767188501e-18,
    0.0,
    4.446081109291883028903e-19,
    0.0,
    2.854611478363714454579e-20,
    0.0,
    -1.191323143003789430200e-21,
    0.0,
    -1.298163436073649879739e-22,
    0.0,
    1.612376317803333679376e-24,
    0.0,
    4.382497519887712432249e-25,
    0.0,
    2.718638957836509028491e-27,
    0.0,
    -1.145889649794793494595e-27,
    0.0,
    -2.441531390324892374741e-29,
    0.0,
    2.350588125980216299037e-30,
    0.0,
    8.679138118472504868752e-32,
    0.0,
    -3.253096183681825835047e-33,
    0.0,
    2.016817430500200377007e-33,
    0.0,
    1.054638376585977973138e-32,
    0.0,
    4.954372067629771791213e-32,
    0.0,
    2.318501440971645736477e-31,
    0.0,
    1.080665703221671675284e-30,
    0.0,
    5.017916151339517697786e-30,
    0.0,
    2.321580143203726480091e-29,
    0.0,
    1.070401519446790427387e-28,
])

C3 = np.array([
    0.0,
    -0.001339716090719456904270,
    0.0,
    0.003744215136379393704664,
    0.0,
    -0.001330317891932146812032,
    0.0,
    -0.002265466076547178711476,
    0.0,
    0.0009548499998506730415112,
    0.0,
    0.0006010038458963603912076,
    0.0,
    -0.0001012885828677662195334,
    0.0,
    -0.00006865733449299825642457,
    0.0,
    5.985366791538598159306e-7,
    0.0,
    0.000003331659851239947129044,
    0.0,
    2.191928910243508105718e-7,
    0.0,
    -7.890884245681494410555e-8,
    0.0,
    -9.414685081295262151652e-9,
    0.0,
    9.570116210883480301881e-10,
    0.0,
    1.876313745347066279681e-10,
    0.0,
    -4.437837679323399327465e-12,
    0.0,
    -2.242673850561735324841e-12,
    0.0,
    -3.627686865735243689408e-14,
    0.0,
    1.763980955082158160783e-14,
    0.0,
    7.960765246786777757290e-16,
    0.0,
    -9.419651490589690763915e-17,
    0.0,
    -7.133103854569657824572e-18,
    0.0,
    3.289910584554624320312e-19,
    0.0,
    4.180730374898459241942e-20,
    0.0,
    -5.550542071646361576473e-22,
    0.0,
    -1.787044190626166683626e-22,
    0.0,
    -1.331280396550305186419e-24,
    0.0,
    5.818610606491753448502e-25,
    0.0,
    1.401903361600700844136e-26,
    0.0,
    -1.464145188661238942490e-27,
    0.0,
    -6.030277261353038228256e-29,
    0.0,
    2.442576043900560198294e-30,
    0.0,
    -1.709379888261606536710e-30,
    0.0,
    -9.748846574316498383530e-30,
    0.0,
    -4.989715002391415186406e-29,
    0.0,
    -2.538006226495731004203e-28,
    0.0,
    -1.282909834576915885473e-27,
    0.0,
    -6.446447791159930398925e-27,
    0.0,
    -3.221020396267299280980e-26,
    0.0,
    -1.600787396942467363853e-25,
])

C4 = np.array([
    0.0004648338936176338185363,
    0.0,
    -0.001005660736534047075978,
    0.0,
    0.0002404485657372579302245,
    0.0,
    0.001028308614970232187826,
    0.0,
    -0.0007657861071755644186600,
    0.0,
    -0.0002036528680308481762148,
    0.0,
    0.0002321229049106872789514,
    0.0,
    0.00003260214424386519760774,
    0.0,
    -0.00002557906251794952514025,
    0.0,
    -0.000004107464438915744753982,
    0.0,
    0.000001178111364037129388130,
    0.0,
    2.445656142248457854232e-7,
    0.0,
    -2.391582476734432243033e-8,
    0.0,
    -7.505214207035755288539e-9,
    0.0,
    1.331227941625842819291e-10,
    0.0,
    1.344062675422561971870e-10,
    0.0,
    3.513770042430485928694e-12,
    0.0,
    -1.519154453370391933574e-12,
    0.0,
    -8.915417681447087305495e-14,
    0.0,
    1.119589116522853577323e-14,
    0.0,
    1.051601332991481496369e-15,
    0.0,
    -5.178655273646683659979e-17,
    0.0,
    -8.065874861916565950043e-18,
    0.0,
    1.060820453056403078929e-19,
    0.0,
    4.433680674299815693994e-20,
    0.0,
    4.320051147286304019010e-22,
    0.0,
    -1.823038921431491759743e-22,
    0.0,
    -5.119936001206540154862e-24,
    0.0,
    5.695065134509075761293e-25,
    0.0,
    2.672233731864415830638e-26,
    0.0,
    -1.150254849227278058579e-27,
    0.0,
    9.487431252333366039788e-28,
    0.0,
    5.914735668131842225161e-27,
    0.0,
    3.311072064072072311961e-26,
    0.0,
    1.837207659908407314584e-25,
    0.0,
    1.010577958801573103023e-24,
    0.0,
    5.513104250769874021717e-24,
    0.0,
    2.984137757673100148477e-23,
    0.0,
    1.603266863362448442784e-22,
])

TABLES = (C0, C1, C2, C3, C4)
