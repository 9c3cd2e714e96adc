#include <iostream>
using namespace std;
int main()
{
	long number, reverse = 0;
	cout << "Enter number: ";
	cin >> number;
	long original = number;
	while (number > 0)
	{
		reverse = reverse * 10 + number % 10;
		number = number / 10;
	}
	cout << "The reverse of " << original << " is " << reverse << endl;
	return 0;
}
