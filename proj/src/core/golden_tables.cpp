// Reference Bernstein coefficient tables for the certified bound campaign.
// Row-major 7x5 matrices ((6,4) tensors over p,x); the g2* entries are the
// fixed-k slices of the (6,4,3) tensors over (p,x,u).

#include "golden.hpp"

namespace hcert::golden {
namespace {

const char* const k_b0[35] = {
    "60", "60", "52", "37", "4",
    "60", "123/2", "167/3", "42", "4",
    "52", "278/5", "323/6", "89/2", "39/5",
    "183/5", "429/10", "233/5", "218/5", "77/5",
    "92/5", "55/2", "181/5", "77/2", "22",
    "4", "27/2", "23", "53/2", "18",
    "1", "1", "1", "1", "1",
};

const char* const k_bhalf[35] = {
    "60", "60", "52", "46", "40",
    "60", "127/2", "179/3", "55", "40",
    "52", "59", "1829/30", "603/10", "209/5",
    "75/2", "477/10", "1123/20", "1217/20", "227/5",
    "22", "35", "728/15", "283/5", "234/5",
    "10", "23", "36", "43", "38",
    "15/4", "15/4", "15/4", "15/4", "15/4",
};

const char* const k_q1g0[35] = {
    "60", "60", "58", "433/8", "191/4",
    "60", "483/8", "353/6", "1773/32", "197/4",
    "58", "2353/40", "27791/480", "1103/20", "991/20",
    "2163/40", "2217/40", "17681/320", "17083/320", "973/20",
    "971/20", "3231/64", "49117/960", "32193/640", "14929/320",
    "671/16", "5691/128", "17663/384", "23631/512", "2795/64",
    "2233/64", "9697/256", "20543/512", "5267/128", "5087/128",
};

const char* const k_q2g0[35] = {
    "191/4", "331/8", "65/2", "41/2", "4",
    "197/4", "1379/32", "821/24", "87/4", "4",
    "991/20", "879/20", "17039/480", "1853/80", "99/20",
    "973/20", "14053/320", "11621/320", "3949/160", "137/20",
    "14929/320", "27523/640", "35107/960", "8353/320", "47/5",
    "2795/64", "21089/512", "6925/192", "1731/64", "12",
    "5087/128", "4907/128", "17663/512", "1729/64", "223/16",
};

const char* const k_q3g0[35] = {
    "2233/64", "9697/256", "20543/512", "5267/128", "5087/128",
    "891/32", "2003/64", "26303/768", "18505/512", "573/16",
    "1629/80", "773/32", "53119/1920", "9689/320", "9899/320",
    "131/10", "2717/160", "3319/160", "15207/640", "4023/160",
    "137/20", "829/80", "277/20", "67/4", "92/5",
    "5/2", "39/8", "29/4", "37/4", "21/2",
    "1", "1", "1", "1", "1",
};

const char* const k_q4g0[35] = {
    "5087/128", "4907/128", "17663/512", "1729/64", "223/16",
    "573/16", "18167/512", "25289/768", "1727/64", "127/8",
    "9899/320", "10109/320", "58159/1920", "8313/320", "343/20",
    "4023/160", "16977/640", "1051/40", "47/2", "341/20",
    "92/5", "401/20", "409/20", "303/16", "59/4",
    "21/2", "47/4", "49/4", "93/8", "19/2",
    "1", "1", "1", "1", "1",
};

const char* const k_q1ghalf[35] = {
    "60", "60", "58", "221/4", "209/4",
    "60", "487/8", "359/6", "1853/32", "221/4",
    "58", "239/4", "9563/160", "1177/20", "2273/40",
    "867/16", "9087/160", "37079/640", "1861/32", "18241/320",
    "49", "8389/160", "8753/160", "3591/64", "17909/320",
    "1375/32", "6035/128", "38761/768", "27123/512", "6891/128",
    "9375/256", "10581/256", "23265/512", "12489/256", "12921/256",
};

const char* const k_q2ghalf[35] = {
    "209/4", "197/4", "46", "43", "40",
    "221/4", "1683/32", "1181/24", "181/4", "40",
    "2273/40", "274/5", "8267/160", "3781/80", "809/20",
    "18241/320", "1117/20", "34127/640", "15671/320", "827/20",
    "17909/320", "17863/320", "8661/160", "1607/32", "849/20",
    "6891/128", "28005/512", "41407/768", "6485/128", "173/4",
    "12921/256", "13353/256", "26721/512", "6357/128", "10995/256",
};

const char* const k_q3ghalf[35] = {
    "9375/256", "10581/256", "23265/512", "12489/256", "12921/256",
    "3875/128", "2273/64", "15517/384", "22833/512", "3015/64",
    "1511/64", "9333/320", "66401/1920", "5037/128", "3401/80",
    "549/32", "3627/160", "18033/640", "4235/128", "11693/320",
    "183/16", "261/16", "5093/240", "128/5", "2303/80",
    "55/8", "81/8", "107/8", "65/4", "147/8",
    "15/4", "15/4", "15/4", "15/4", "15/4",
};

const char* const k_q4ghalf[35] = {
    "12921/256", "13353/256", "26721/512", "6357/128", "10995/256",
    "3015/64", "25407/512", "9689/192", "6229/128", "5459/128",
    "3401/80", "29231/640", "90677/1920", "1479/32", "13199/320",
    "11693/320", "25597/640", "26877/640", "13339/320", "6071/160",
    "2303/80", "1279/40", "8153/240", "2729/80", "2531/80",
    "147/8", "41/2", "175/8", "177/8", "167/8",
    "15/4", "15/4", "15/4", "15/4", "15/4",
};

const char* const k_q11g0[35] = {
    "60", "60", "119/2", "3745/64", "3649/64",
    "60", "1923/32", "5731/96", "30117/512", "14701/256",
    "119/2", "19103/320", "456343/7680", "300401/5120", "293907/5120",
    "18723/320", "9411/160", "600823/10240", "594667/10240", "1166459/20480",
    "18257/320", "117727/2048", "235457/4096", "4673237/81920", "4595849/81920",
    "28247/512", "456537/8192", "915641/16384", "7290803/131072", "3595905/65536",
    "216721/4096", "1756493/32768", "7067867/131072", "14115709/262144", "13970539/262144",
};

const char* const k_q12g0[35] = {
    "3649/64", "3553/64", "107/2", "815/16", "191/4",
    "14701/256", "28687/512", "20779/384", "6609/128", "97/2",
    "293907/5120", "287413/5120", "417379/7680", "33271/640", "979/20",
    "1166459/20480", "35737/640", "555073/10240", "266233/5120", "491/10",
    "4595849/81920", "4518461/81920", "1099897/20480", "1058427/20480", "250657/5120",
    "3595905/65536", "7092817/131072", "1732289/32768", "1672755/32768", "24847/512",
    "13970539/262144", "13825369/262144", "6777527/131072", "1642283/32768", "391817/8192",
};

const char* const k_q13g0[35] = {
    "216721/4096", "1756493/32768", "7067867/131072", "14115709/262144", "13970539/262144",
    "103733/2048", "843419/16384", "3405303/65536", "3412453/65536", "6778729/131072",
    "245837/5120", "401253/8192", "1626395/32768", "16363463/327680", "16317991/327680",
    "115337/2560", "945367/20480", "3849131/81920", "121573/2560", "7794061/163840",
    "53541/1280", "441089/10240", "1083137/24576", "3667901/81920", "738539/16384",
    "4917/128", "40747/1024", "503237/12288", "171395/4096", "347017/8192",
    "2233/64", "18629/512", "77195/2048", "158743/4096", "161659/4096",
};

const char* const k_q14g0[35] = {
    "13970539/262144", "13825369/262144", "6777527/131072", "1642283/32768", "391817/8192",
    "6778729/131072", "841569/16384", "3312949/65536", "1611811/32768", "193041/4096",
    "16317991/327680", "16272519/327680", "8041031/163840", "982247/20480", "472639/10240",
    "7794061/163840", "780745/16384", "3875909/81920", "380553/8192", "45999/1024",
    "738539/16384", "3717489/81920", "5564449/122880", "457597/10240", "111193/2560",
    "347017/8192", "87811/2048", "528599/12288", "87407/2048", "10677/256",
    "161659/4096", "164575/4096", "83027/2048", "5177/128", "5087/128",
};

const char* const k_q11ghalf[35] = {
    "60", "60", "119/2", "1877/32", "3685/64",
    "60", "1927/32", "5755/96", "30377/512", "14965/256",
    "119/2", "959/16", "460049/7680", "60951/1024", "301427/5120",
    "7491/128", "151497/2560", "1216171/20480", "2426941/40960", "1205039/20480",
    "3655/64", "296857/5120", "448723/7680", "2398229/40960", "4783221/81920",
    "56635/1024", "461947/8192", "1870411/32768", "7531625/131072", "3772097/65536",
    "871215/16384", "27885/512", "7260375/131072", "14688015/262144", "14781075/262144",
};

const char* const k_q12ghalf[35] = {
    "3685/64", "113/2", "883/16", "215/4", "209/4",
    "14965/256", "29483/512", "21679/384", "7061/128", "215/4",
    "301427/5120", "298099/5120", "440081/7680", "35959/640", "8783/160",
    "1205039/20480", "478643/8192", "236489/4096", "290929/5120", "142553/2560",
    "4783221/81920", "74531/1280", "3550073/61440", "146151/2560", "287417/5120",
    "3772097/65536", "7556763/131072", "470745/8192", "1868191/32768", "230457/4096",
    "14781075/262144", "14874135/262144", "7446495/131072", "1854975/32768", "918825/16384",
};

const char* const k_q13ghalf[35] = {
    "871215/16384", "27885/512", "7260375/131072", "14688015/262144", "14781075/262144",
    "418135/8192", "430373/8192", "3519553/65536", "3578195/65536", "7236881/131072",
    "198975/4096", "514779/10240", "25399237/491520", "17309657/327680", "17596319/327680",
    "93879/2048", "488691/10240", "4043133/81920", "1039429/20480", "1700161/32768",
    "43919/1024", "57539/1280", "5750513/122880", "3967591/81920", "4080383/81920",
    "20375/512", "21513/512", "541379/12288", "188037/4096", "389201/8192",
    "9375/256", "4989/128", "84339/2048", "177009/4096", "184371/4096",
};

const char* const k_q14ghalf[35] = {
    "14781075/262144", "14874135/262144", "7446495/131072", "1854975/32768", "918825/16384",
    "7236881/131072", "1829343/32768", "3680535/65536", "1841759/32768", "457911/8192",
    "17596319/327680", "17882981/327680", "27119209/491520", "142021/2560", "1134653/20480",
    "1700161/32768", "4343089/81920", "4413879/81920", "2229949/40960", "559207/10240",
    "4080383/81920", "838635/16384", "1285453/24576", "543941/10240", "274061/5120",
    "389201/8192", "50291/1024", "620141/12288", "105507/2048", "26703/512",
    "184371/4096", "191733/4096", "99063/2048", "12705/256", "12921/256",
};

const char* const k_g2k0[35] = {
    "0", "18", "36", "37", "4",
    "0", "39/2", "119/3", "42", "4",
    "12/5", "21", "1223/30", "89/2", "39/5",
    "39/5", "231/10", "197/5", "218/5", "77/5",
    "72/5", "253/10", "539/15", "77/2", "22",
    "16", "45/2", "27", "53/2", "18",
    "1", "1", "1", "1", "1",
};

const char* const k_g2k1[35] = {
    "0", "18", "36", "40", "16",
    "0", "121/6", "41", "139/3", "16",
    "8/5", "323/15", "769/18", "493/10", "91/5",
    "51/10", "223/10", "2449/60", "953/20", "113/5",
    "46/5", "1339/60", "3221/90", "2449/60", "127/5",
    "10", "73/4", "151/6", "107/4", "19",
    "0", "0", "0", "0", "0",
};

const char* const k_g2k2[35] = {
    "0", "18", "36", "43", "28",
    "0", "125/6", "127/3", "152/3", "28",
    "4/5", "331/15", "269/6", "1637/30", "443/15",
    "3", "221/10", "216/5", "267/5", "163/5",
    "32/5", "1309/60", "1157/30", "937/20", "101/3",
    "8", "221/12", "169/6", "129/4", "77/3",
    "3/4", "3/4", "3/4", "3/4", "3/4",
};

const char* const k_g2k3[35] = {
    "0", "18", "36", "46", "40",
    "0", "43/2", "131/3", "55", "40",
    "0", "113/5", "471/10", "603/10", "209/5",
    "3/2", "45/2", "931/20", "1217/20", "227/5",
    "6", "119/5", "664/15", "283/5", "234/5",
    "10", "23", "36", "43", "38",
    "15/4", "15/4", "15/4", "15/4", "15/4",
};

const char* const k_g2q1k0[35] = {
    "0", "9", "18", "199/8", "55/2",
    "0", "75/8", "113/6", "837/32", "29",
    "3/5", "201/20", "629/32", "4351/160", "151/5",
    "15/8", "111/10", "6569/320", "1793/64", "311/10",
    "15/4", "3997/320", "6861/320", "2289/80", "2533/80",
    "95/16", "1791/128", "8531/384", "14763/512", "1015/32",
    "505/64", "3865/256", "11471/512", "905/32", "3953/128",
};

const char* const k_g2q1k1[35] = {
    "0", "9", "18", "101/4", "29",
    "0", "229/24", "115/6", "2591/96", "31",
    "2/5", "611/60", "5797/288", "679/24", "3899/120",
    "99/80", "1753/160", "40121/1920", "9323/320", "10697/320",
    "49/20", "4543/384", "61801/2880", "56641/1920", "1013/30",
    "123/32", "405/32", "5555/256", "14995/512", "4273/128",
    "81/16", "6705/512", "10911/512", "14445/512", "4095/128",
};

const char* const k_g2q1k2[35] = {
    "0", "9", "18", "205/8", "61/2",
    "0", "233/24", "39/2", "2671/96", "33",
    "1/5", "619/60", "9893/480", "4707/160", "4181/120",
    "27/40", "871/80", "6837/320", "973/32", "2879/80",
    "29/20", "7343/640", "873/40", "11837/384", "17491/480",
    "39/16", "577/48", "8429/384", "15683/512", "3467/96",
    "867/256", "6285/512", "11001/512", "15135/512", "8889/256",
};

const char* const k_g2q1k3[35] = {
    "0", "9", "18", "26", "32",
    "0", "79/8", "119/6", "917/32", "35",
    "0", "209/20", "10129/480", "1223/40", "149/4",
    "3/16", "1743/160", "14039/640", "5093/160", "12409/320",
    "3/4", "1827/160", "10819/480", "2607/80", "6349/160",
    "55/32", "1547/128", "17641/768", "16827/512", "5109/128",
    "735/256", "3237/256", "11745/512", "8277/256", "10005/256",
};

const char* const k_g2q2k0[35] = {
    "55/2", "241/8", "57/2", "41/2", "4",
    "29", "1019/32", "725/24", "87/4", "4",
    "151/5", "5313/160", "5069/160", "1853/80", "99/20",
    "311/10", "10939/320", "10517/320", "3949/160", "137/20",
    "2533/80", "2777/80", "2153/64", "8353/320", "47/5",
    "1015/32", "17717/512", "6481/192", "1731/64", "12",
    "3953/128", "2143/64", "16799/512", "1729/64", "223/16",
};

const char* const k_g2q2k1[35] = {
    "29", "131/4", "33", "28", "16",
    "31", "3361/96", "845/24", "355/12", "16",
    "3899/120", "4403/120", "53177/1440", "1489/48", "331/20",
    "10697/320", "12071/320", "73097/1920", "2063/64", "353/20",
    "1013/30", "24341/640", "110947/2880", "21151/640", "305/16",
    "4273/128", "19189/512", "9749/256", "1061/32", "325/16",
    "4095/128", "18315/512", "18651/512", "16461/512", "333/16",
};

const char* const k_g2q2k2[35] = {
    "61/2", "283/8", "75/2", "71/2", "28",
    "33", "3665/96", "965/24", "449/12", "28",
    "4181/120", "19327/480", "4061/96", "9373/240", "1703/60",
    "2879/80", "6651/160", "13981/320", "6453/160", "583/20",
    "17491/480", "80743/1920", "1417/32", "78887/1920", "7219/240",
    "3467/96", "63895/1536", "4213/96", "15755/384", "1475/48",
    "8889/256", "20421/512", "21573/512", "20325/512", "7803/256",
};

const char* const k_g2q2k3[35] = {
    "32", "38", "42", "43", "40",
    "35", "1323/32", "1085/24", "181/4", "40",
    "149/4", "1757/40", "4589/96", "3781/80", "809/20",
    "12409/320", "1829/40", "31823/640", "15671/320", "827/20",
    "6349/160", "1871/40", "24439/480", "1607/32", "849/20",
    "5109/128", "24045/512", "39295/768", "6485/128", "173/4",
    "10005/256", "11733/256", "25569/512", "6357/128", "10995/256",
};

const char* const k_g2q3k0[35] = {
    "505/64", "3865/256", "11471/512", "905/32", "3953/128",
    "315/32", "1037/64", "17351/768", "14197/512", "1923/64",
    "185/16", "1353/80", "42611/1920", "16897/640", "4531/160",
    "25/2", "535/32", "3321/160", "15297/640", "405/16",
    "237/20", "1187/80", "2107/120", "3133/160", "817/40",
    "17/2", "81/8", "23/2", "199/16", "51/4",
    "1", "1", "1", "1", "1",
};

const char* const k_g2q3k1[35] = {
    "81/16", "6705/512", "10911/512", "14445/512", "4095/128",
    "201/32", "3465/256", "1339/64", "13895/512", "3917/128",
    "293/40", "2609/192", "114647/5760", "48391/1920", "6769/240",
    "627/80", "2067/160", "34463/1920", "14161/640", "1569/64",
    "73/10", "5281/480", "10483/720", "1675/96", "2291/120",
    "5", "113/16", "215/24", "167/16", "45/4",
    "0", "0", "0", "0", "0",
};

const char* const k_g2q3k2[35] = {
    "867/256", "6285/512", "11001/512", "15135/512", "8889/256",
    "555/128", "9623/768", "16145/768", "14587/512", "12799/384",
    "1679/320", "1499/120", "38339/1920", "10193/384", "9879/320",
    "939/160", "381/32", "2891/160", "3003/128", "4329/160",
    "463/80", "1651/160", "297/20", "1501/80", "1711/80",
    "35/8", "335/48", "19/2", "93/8", "313/24",
    "3/4", "3/4", "3/4", "3/4", "3/4",
};

const char* const k_g2q3k3[35] = {
    "735/256", "3237/256", "11745/512", "8277/256", "10005/256",
    "515/128", "845/64", "8797/384", "16281/512", "153/4",
    "343/64", "4369/320", "14347/640", "19491/640", "11633/320",
    "213/32", "2199/160", "13553/640", "17899/640", "10559/320",
    "119/16", "1033/80", "4453/240", "473/20", "439/16",
    "55/8", "81/8", "107/8", "65/4", "147/8",
    "15/4", "15/4", "15/4", "15/4", "15/4",
};

const char* const k_g2q4k0[35] = {
    "3953/128", "2143/64", "16799/512", "1729/64", "223/16",
    "1923/64", "16571/512", "24473/768", "1727/64", "127/8",
    "4531/160", "19351/640", "11467/384", "8313/320", "343/20",
    "405/16", "17103/640", "132/5", "47/2", "341/20",
    "817/40", "3403/160", "314/15", "303/16", "59/4",
    "51/4", "209/16", "51/4", "93/8", "19/2",
    "1", "1", "1", "1", "1",
};

const char* const k_g2q4k1[35] = {
    "4095/128", "18315/512", "18651/512", "16461/512", "333/16",
    "3917/128", "17441/512", "4451/128", "7973/256", "341/16",
    "6769/240", "19971/640", "183779/5760", "1161/40", "337/16",
    "1569/64", "17219/640", "52811/1920", "8123/320", "779/40",
    "2291/120", "9953/480", "15217/720", "9463/480", "317/20",
    "45/4", "193/16", "293/24", "183/16", "19/2",
    "0", "0", "0", "0", "0",
};

const char* const k_g2q4k2[35] = {
    "8889/256", "20421/512", "21573/512", "20325/512", "7803/256",
    "12799/384", "58631/1536", "31015/768", "29465/768", "11609/384",
    "9879/320", "67583/1920", "14315/384", "34331/960", "9307/320",
    "4329/160", "19617/640", "649/20", "1257/40", "4227/160",
    "1711/80", "1921/80", "507/20", "3957/160", "343/16",
    "313/24", "347/24", "91/6", "713/48", "317/24",
    "3/4", "3/4", "3/4", "3/4", "3/4",
};

const char* const k_g2q4k3[35] = {
    "10005/256", "11733/256", "25569/512", "6357/128", "10995/256",
    "153/4", "22887/512", "9353/192", "6229/128", "5459/128",
    "11633/320", "27041/640", "29447/640", "1479/32", "13199/320",
    "10559/320", "24337/640", "26429/640", "13339/320", "6071/160",
    "439/16", "1249/40", "8089/240", "2729/80", "2531/80",
    "147/8", "41/2", "175/8", "177/8", "167/8",
    "15/4", "15/4", "15/4", "15/4", "15/4",
};

} // namespace

const ReferenceTable kTables[] = {
    {"b0", k_b0},
    {"bhalf", k_bhalf},
    {"q1g0", k_q1g0},
    {"q2g0", k_q2g0},
    {"q3g0", k_q3g0},
    {"q4g0", k_q4g0},
    {"q1ghalf", k_q1ghalf},
    {"q2ghalf", k_q2ghalf},
    {"q3ghalf", k_q3ghalf},
    {"q4ghalf", k_q4ghalf},
    {"q11g0", k_q11g0},
    {"q12g0", k_q12g0},
    {"q13g0", k_q13g0},
    {"q14g0", k_q14g0},
    {"q11ghalf", k_q11ghalf},
    {"q12ghalf", k_q12ghalf},
    {"q13ghalf", k_q13ghalf},
    {"q14ghalf", k_q14ghalf},
    {"g2k0", k_g2k0},
    {"g2k1", k_g2k1},
    {"g2k2", k_g2k2},
    {"g2k3", k_g2k3},
    {"g2q1k0", k_g2q1k0},
    {"g2q1k1", k_g2q1k1},
    {"g2q1k2", k_g2q1k2},
    {"g2q1k3", k_g2q1k3},
    {"g2q2k0", k_g2q2k0},
    {"g2q2k1", k_g2q2k1},
    {"g2q2k2", k_g2q2k2},
    {"g2q2k3", k_g2q2k3},
    {"g2q3k0", k_g2q3k0},
    {"g2q3k1", k_g2q3k1},
    {"g2q3k2", k_g2q3k2},
    {"g2q3k3", k_g2q3k3},
    {"g2q4k0", k_g2q4k0},
    {"g2q4k1", k_g2q4k1},
    {"g2q4k2", k_g2q4k2},
    {"g2q4k3", k_g2q4k3},
};

const std::size_t kTableCount = 38;

} // namespace hcert::golden
