#include<iostream>
#include<conio.h>
using namespace std;
int main()
{
	int list[20], total, j, hold;
	cout<<"Enter the size of array: ";
	cin>>total;
	cout<<"Enter "<<total<<" elements"<<endl;
	for(j=0; j<total; j++)
	{
		cin>>list[j];
	}
	hold=list[0];
	list[0]=list[total-1];
	list[total-1]=hold;
	cout<<"Array after swapping first and last element:"<<endl;
	for(j=0; j<total; j++)
	{
		cout<<list[j]<<" ";
	}
	getch();
	return 0;
}
