#include <iostream>
using namespace std;
int main()
{
	int n, result = 1;
	cout << "Enter number to find factorial: ";
	cin >> n;
	for (int counter = n; counter > 0; counter--)
	{
		result = result * counter;
	}
	cout << n << "! = " << result << endl;
	return 0;
}
